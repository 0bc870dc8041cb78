#include "rsb/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace rsb {

Word::Word(const std::vector<Letter>& letters) {
    for (const auto& l : letters) {
        if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
        if (!letters_.empty() && letters_.back() == l.inverse())
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

Word Word::inverse() const {
    std::vector<Letter> out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return Word(out);
}

Word Word::pow(int k) const {
    Word base = k < 0 ? inverse() : *this;
    Word out;
    for (int i = 0; i < std::abs(k); ++i) out = out * base;
    return out;
}

bool Word::is_cyclically_reduced() const {
    return letters_.size() < 2 || letters_.front() != letters_.back().inverse();
}

Word Word::cyclic_reduction() const {
    std::size_t lo = 0, hi = letters_.size();
    while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(hi)));
}

std::vector<Word> Word::rotations() const {
    std::vector<Word> out;
    const std::size_t m = letters_.size();
    for (std::size_t s = 0; s < std::max<std::size_t>(m, 1); ++s) {
        std::vector<Letter> r;
        for (std::size_t i = 0; i < m; ++i) r.push_back(letters_[(s + i) % m]);
        out.emplace_back(r);
    }
    return out;
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> all = a.letters_;
    all.insert(all.end(), b.letters_.begin(), b.letters_.end());
    return Word(all);
}

bool operator<(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    for (std::size_t i = 0; i < a.length(); ++i) {
        int ra = letter_rank(a.letters_[i]), rb = letter_rank(b.letters_[i]);
        if (ra != rb) return ra < rb;
    }
    return false;
}

GroupPresentation::GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators,
                                     std::vector<Word> peripheral)
    : generators_(std::move(generators)), relators_(std::move(relators)), peripheral_(std::move(peripheral)) {
    if (generators_.empty()) throw std::invalid_argument("presentation needs at least one generator");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (g.empty() || !std::isalpha(static_cast<unsigned char>(g[0])))
            throw std::invalid_argument("generator names must start with a letter: '" + g + "'");
        for (char c : g)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw std::invalid_argument("bad generator name '" + g + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (generators_[j] == g) throw std::invalid_argument("duplicate generator '" + g + "'");
    }
    auto check = [this](const Word& w, const char* what) {
        if (w.empty()) throw std::invalid_argument(std::string(what) + " must be a nonempty reduced word");
        for (const auto& l : w.letters())
            if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= generators_.size())
                throw std::invalid_argument(std::string(what) + " uses an unknown generator");
    };
    for (const auto& r : relators_) check(r, "relator");
    for (const auto& p : peripheral_) check(p, "peripheral word");
}

int GroupPresentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

class WordParser {
public:
    WordParser(const GroupPresentation& pres, std::string_view text) : pres_(pres), s_(text) {}

    Word parse() {
        Word w = sequence();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("word syntax: " + msg + " at position " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*')) ++pos_;
    }
    Word sequence() {
        Word w;
        for (;;) {
            skip();
            if (pos_ >= s_.size() || s_[pos_] == ')') return w;
            w = w * factor();
        }
    }
    Word factor() {
        Word base;
        if (s_[pos_] == '(') {
            ++pos_;
            base = sequence();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
            ++pos_;
        } else if (s_[pos_] == '1' && (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
            ++pos_;
        } else if (std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            int idx = pres_.generator_index(name);
            if (idx < 0) {
                pos_ = start;
                fail("unknown generator '" + name + "'");
            }
            base = Word({Letter{idx, 1}});
        } else {
            fail("expected a generator");
        }
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            bool neg = false;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_ || pos_ - start > 6) fail("bad exponent");
            int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    const GroupPresentation& pres_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Word GroupPresentation::parse_word(std::string_view text) const { return WordParser(*this, text).parse(); }

std::string GroupPresentation::format(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += generators_.at(static_cast<std::size_t>(l.gen));
        if (l.exp < 0) out += "^-1";
    }
    return out;
}

bool GroupPresentation::is_peripheral(const Word& w) const {
    Word c = w.cyclic_reduction();
    if (c.empty()) return false;
    for (const auto& p : peripheral_) {
        Word pc = p.cyclic_reduction();
        if (pc.empty() || c.length() % pc.length() != 0) continue;
        int k = static_cast<int>(c.length() / pc.length());
        for (int sgn : {1, -1}) {
            Word power = pc.pow(sgn * k);
            for (const auto& r : power.rotations())
                if (r == c) return true;
        }
    }
    return false;
}

std::size_t reduced_word_count(std::size_t rank, std::size_t len) {
    if (len == 0) return 1;
    std::size_t c = 2 * rank;
    for (std::size_t i = 1; i < len; ++i) c *= 2 * rank - 1;
    return c;
}

std::vector<Word> enumerate_words(std::size_t rank, std::size_t max_len) {
    std::vector<Word> out{Word()};
    std::size_t level_start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i) {
            for (std::size_t r = 0; r < 2 * rank; ++r) {
                Letter l{static_cast<int>(r / 2), r % 2 == 0 ? 1 : -1};
                const auto& base = out[i].letters();
                if (!base.empty() && base.back() == l.inverse()) continue;
                std::vector<Letter> next = base;
                next.push_back(l);
                out.emplace_back(next);
            }
        }
        level_start = level_end;
    }
    return out;
}

}  // namespace rsb
