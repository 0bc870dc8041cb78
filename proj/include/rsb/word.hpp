#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rsb {

struct Letter {
    int gen = 0;  // generator index
    int exp = 1;  // +1 or -1

    Letter inverse() const { return {gen, -exp}; }
    friend bool operator==(const Letter& a, const Letter& b) { return a.gen == b.gen && a.exp == b.exp; }
    friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
};

/// A freely reduced word in the generators and their inverses.
class Word {
public:
    Word() = default;
    /// Freely reduces the letter sequence.
    explicit Word(const std::vector<Letter>& letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    Word pow(int k) const;
    bool is_cyclically_reduced() const;
    /// Conjugate to a cyclically reduced word.
    Word cyclic_reduction() const;
    /// All cyclic rotations of the word.
    std::vector<Word> rotations() const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    /// Shortlex order with letters ranked g0, g0^-1, g1, g1^-1, ...
    friend bool operator<(const Word& a, const Word& b);

private:
    std::vector<Letter> letters_;
};

/// Rank of a letter in the enumeration order g0, g0^-1, g1, g1^-1, ...
inline int letter_rank(const Letter& l) { return 2 * l.gen + (l.exp < 0 ? 1 : 0); }

class GroupPresentation {
public:
    GroupPresentation() = default;
    GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators = {},
                      std::vector<Word> peripheral = {});

    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<Word>& relators() const { return relators_; }
    /// Boundary classes (one per puncture or boundary component).
    const std::vector<Word>& peripheral() const { return peripheral_; }
    std::size_t rank() const { return generators_.size(); }

    int generator_index(std::string_view name) const;

    /// Parses e.g. "c1^-1 c3", "(c1^-1 c3)^2", "c1*c2^-1"; "1" or "" is the
    /// identity. Throws std::invalid_argument on unknown names.
    Word parse_word(std::string_view text) const;
    std::string format(const Word& w) const;

    /// True if w is conjugate to a nonzero power of a peripheral word.
    bool is_peripheral(const Word& w) const;

private:
    std::vector<std::string> generators_;
    std::vector<Word> relators_;
    std::vector<Word> peripheral_;
};

/// Number of freely reduced words of length exactly len on r generators.
std::size_t reduced_word_count(std::size_t rank, std::size_t len);

/// All freely reduced words of length <= max_len in shortlex order.
std::vector<Word> enumerate_words(std::size_t rank, std::size_t max_len);

}  // namespace rsb
