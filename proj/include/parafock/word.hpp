#ifndef PARAFOCK_WORD_HPP
#define PARAFOCK_WORD_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace parafock {

/// Sequence of ur sort labels r_1 ... r_n (1-based), written |r_1 r_2 ... r_n>.
struct Word {
    std::vector<int> letters;

    Word() = default;
    Word(std::initializer_list<int> l) : letters(l) {}
    explicit Word(std::vector<int> l) : letters(std::move(l)) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    /// Letters concatenated, e.g. "112"; sorts above 9 are comma separated.
    std::string to_string() const
    {
        bool wide = false;
        for (int l : letters)
            wide = wide || l > 9;
        std::string out;
        for (std::size_t k = 0; k < letters.size(); ++k) {
            if (wide && k)
                out += ',';
            out += std::to_string(letters[k]);
        }
        return out;
    }

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;
};

}  // namespace parafock

#endif
