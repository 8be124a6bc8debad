#ifndef PARAFOCK_YOUNG_HPP
#define PARAFOCK_YOUNG_HPP

#include "parafock/exactalg/gaussian_rational.hpp"
#include "parafock/report.hpp"
#include "parafock/word.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace parafock::young {

using GR = GaussianRational;

/// Partition of n: weakly decreasing positive row lengths.
class YoungDiagram {
public:
    /// Throws std::invalid_argument unless rows are positive and weakly decreasing.
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    int size() const { return n_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    /// Length of column c (0-based).
    int column_length(int c) const;

    /// "(2,1)"
    std::string to_string() const;

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

private:
    std::vector<int> rows_;
    int n_ = 0;
};

/// A filling of a diagram's boxes, row by row.
using Filling = std::vector<std::vector<int>>;

/// Numbers 1..n, strictly increasing along rows and down columns.
struct StandardTableau {
    YoungDiagram shape;
    Filling filling;
};

/// Numbers from 1..R, weakly increasing along rows, strictly down columns.
struct StandardScheme {
    YoungDiagram shape;
    Filling filling;

    /// Entries read row by row, e.g. "112" for rows (1,1),(2).
    Word content() const;
};

std::string filling_to_string(const Filling& f);

/// Partitions of n in lexicographically decreasing order. 1 <= n <= 12.
std::vector<YoungDiagram> enumerate_diagrams(int n);

std::vector<StandardTableau> enumerate_standard_tableaux(const YoungDiagram& d);

/// f_k by backtracking over fillings.
std::uint64_t count_standard_tableaux(const YoungDiagram& d);

/// sum_k f_k^2 == n!, with each diagram's f_k listed. 1 <= n <= 8.
Report verify_sum_squares(int n);

std::vector<StandardScheme> enumerate_schemes(const YoungDiagram& d, int sorts);

/// Exact linear combination of equal-length words. Kept canonical: no zero
/// terms, coefficients scaled to coprime Gaussian integers and the
/// lexicographically first word made positive (real part, else imaginary).
class FormalTensor {
public:
    using Terms = std::map<Word, GR>;

    FormalTensor() = default;
    /// Builds and canonicalizes. Throws std::invalid_argument on mixed word
    /// lengths.
    explicit FormalTensor(Terms terms);
    static FormalTensor raw(Terms terms);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Sum of coefficients without canonical rescaling.
    friend FormalTensor operator+(const FormalTensor& a, const FormalTensor& b);
    friend FormalTensor operator-(const FormalTensor& a, const FormalTensor& b);
    friend FormalTensor operator*(const GR& s, const FormalTensor& a);

    FormalTensor canonical() const;
    /// Relabels sorts by `perm` (perm[r-1] is the new label of r).
    FormalTensor relabeled(std::span<const int> perm) const;

    /// "|112> + |121> + |211>"
    std::string to_string() const;

    friend bool operator==(const FormalTensor&, const FormalTensor&) = default;

private:
    Terms terms_;
};

/// Rank of a set of formal tensors over Q(i).
std::size_t tensor_rank(std::span<const FormalTensor> tensors);
/// Exact equality of the spans of two families.
bool same_span(std::span<const FormalTensor> a, std::span<const FormalTensor> b);

/// Young symmetrizer of tableau t (row symmetrization, then column
/// antisymmetrization, acting on tensor positions) applied to the word that
/// places the scheme's entries at the positions t assigns to each box. The
/// result is canonicalized. Throws std::invalid_argument if t and s have
/// different shapes, or if the result vanishes.
FormalTensor scheme_tensor(const StandardTableau& t, const StandardScheme& s);

/// 2|w> minus the other two arrangements of a three-letter word with one
/// repeated letter, e.g. mixed_tensor(|112>) = 2|112> - |121> - |211>.
FormalTensor mixed_tensor(const Word& w);

/// Checks mixed(121) = -mixed(112) - mixed(211), that mixed(112) is nonzero,
/// and the 1<->2 mirrored identity for the {1,2,2} content.
Report formal_dependence_check();

}  // namespace parafock::young

#endif
