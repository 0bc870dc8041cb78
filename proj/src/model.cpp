#include "rsb/model.hpp"

namespace rsb {

bool is_positive_definite(const MatrixK& s, const OrderSpec& ord) {
    auto in = inertia(s, ord);
    return in.positive == static_cast<int>(s.rows());
}

HyperbolicModel hyperbolic_model(const std::vector<RatFunc>& e, const std::vector<MatrixK>& chain, const MatrixK& k,
                                 const OrderSpec& ord, const ValuationSpec& val) {
    const std::size_t n = e.size();
    if (n == 0) throw std::invalid_argument("need at least one eigenvalue");
    for (const auto& x : e)
        if (sign(x, ord) <= 0 || compare(x, RatFunc(1), ord) != Ordering::LT)
            throw std::invalid_argument("eigenvalues must satisfy 0 < e_i < 1");
    SymplecticForm form{n};
    if (k.rows() != 2 * n || !is_symplectic(k, form)) throw std::invalid_argument("conjugator must be symplectic");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto& s = chain[i];
        if (s.rows() != n || s.cols() != n || s != s.transpose())
            throw std::invalid_argument("chain entries must be symmetric n x n matrices");
        const MatrixK below = i == 0 ? MatrixK(n, n) : chain[i - 1];
        if (!is_positive_definite(s - below, ord)) throw std::invalid_argument("chain is not strictly increasing from 0");
    }

    MatrixK g(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = e[i];
        g(n + i, n + i) = e[i].inverse();
    }
    MatrixK kinv = inverse(k);
    MatrixK image = k * g * kinv;

    HyperbolicModel model{RepTable(GroupPresentation({"g"}), {image}, n, ord, val), {}};
    auto& f = model.framing;
    f.points.push_back("m");
    f.images.emplace("m", LagrangianK::horizontal(n).transformed(k));
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const std::string label = "s" + std::to_string(i);
        f.points.push_back(label);
        f.images.emplace(label, LagrangianK::graph(chain[i]).transformed(k));
    }
    f.points.push_back("p");
    f.images.emplace("p", LagrangianK::vertical(n).transformed(k));

    FramingTable::Symmetry sym;
    sym.word = model.rep.presentation().parse_word("g");
    sym.repelling = "m";
    sym.attracting = "p";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const LagrangianK moved = f.image("s" + std::to_string(i)).transformed(image);
        for (std::size_t j = i + 1; j < chain.size(); ++j)
            if (f.image("s" + std::to_string(j)) == moved) {
                sym.action["s" + std::to_string(i)] = "s" + std::to_string(j);
                break;
            }
    }
    f.symmetries.push_back(std::move(sym));
    return model;
}

}  // namespace rsb
