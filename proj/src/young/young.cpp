#include "parafock/young.hpp"

#include "parafock/exactalg/linear.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parafock::young {

// ------------------------------------------------------------ diagrams

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows))
{
    if (rows_.empty())
        throw std::invalid_argument("Young diagram needs at least one row");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1)
            throw std::invalid_argument("Young diagram rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("Young diagram rows must not increase downward");
        n_ += rows_[i];
    }
}

int YoungDiagram::column_length(int c) const
{
    int len = 0;
    for (int r : rows_)
        len += r > c ? 1 : 0;
    return len;
}

std::string YoungDiagram::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(rows_[i]);
    }
    return out + ")";
}

Word StandardScheme::content() const
{
    Word w;
    for (const auto& row : filling)
        w.letters.insert(w.letters.end(), row.begin(), row.end());
    return w;
}

std::string filling_to_string(const Filling& f)
{
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i)
            out += '/';
        for (std::size_t j = 0; j < f[i].size(); ++j) {
            if (j)
                out += ' ';
            out += std::to_string(f[i][j]);
        }
    }
    return out;
}

std::vector<YoungDiagram> enumerate_diagrams(int n)
{
    if (n < 1 || n > 12)
        throw std::out_of_range("enumerate_diagrams: n must lie in 1..12, got " + std::to_string(n));
    std::vector<YoungDiagram> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            parts.push_back(part);
            rec(remaining - part, part);
            parts.pop_back();
        }
    };
    rec(n, n);
    return out;
}

namespace {

// Places 1..n one at a time at the end of an admissible row.
template <typename Visit>
void walk_standard_fillings(const YoungDiagram& d, Visit&& visit)
{
    const auto& rows = d.rows();
    Filling filling(rows.size());
    std::function<void(int)> rec = [&](int k) {
        if (k > d.size()) {
            visit(filling);
            return;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::size_t len = filling[i].size();
            if (static_cast<int>(len) >= rows[i])
                continue;
            if (i > 0 && filling[i - 1].size() <= len)
                continue;
            filling[i].push_back(k);
            rec(k + 1);
            filling[i].pop_back();
        }
    };
    rec(1);
}

}  // namespace

std::vector<StandardTableau> enumerate_standard_tableaux(const YoungDiagram& d)
{
    std::vector<StandardTableau> out;
    walk_standard_fillings(d, [&](const Filling& f) { out.push_back({d, f}); });
    return out;
}

std::uint64_t count_standard_tableaux(const YoungDiagram& d)
{
    std::uint64_t count = 0;
    walk_standard_fillings(d, [&](const Filling&) { ++count; });
    return count;
}

Report verify_sum_squares(int n)
{
    if (n < 1 || n > 8)
        throw std::out_of_range("verify_sum_squares: n must lie in 1..8, got " + std::to_string(n));
    Report report;
    report.name = "sum_squares(n=" + std::to_string(n) + ")";
    std::uint64_t sum = 0;
    for (const auto& d : enumerate_diagrams(n)) {
        const std::uint64_t f = count_standard_tableaux(d);
        sum += f * f;
        report.add("f" + d.to_string(), f > 0, "f=" + std::to_string(f));
    }
    std::uint64_t factorial = 1;
    for (int k = 2; k <= n; ++k)
        factorial *= static_cast<std::uint64_t>(k);
    report.add("sum f^2 = n!", sum == factorial,
               "sum=" + std::to_string(sum) + " n!=" + std::to_string(factorial));
    return report;
}

std::vector<StandardScheme> enumerate_schemes(const YoungDiagram& d, int sorts)
{
    if (sorts < 1)
        throw std::invalid_argument("enumerate_schemes: R must be >= 1");
    std::vector<StandardScheme> out;
    const auto& rows = d.rows();
    Filling filling;
    for (int r : rows)
        filling.emplace_back(static_cast<std::size_t>(r), 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == rows.size()) {
            out.push_back({d, filling});
            return;
        }
        if (j == static_cast<std::size_t>(rows[i])) {
            rec(i + 1, 0);
            return;
        }
        int lo = 1;
        if (j > 0)
            lo = std::max(lo, filling[i][j - 1]);
        if (i > 0)
            lo = std::max(lo, filling[i - 1][j] + 1);
        for (int v = lo; v <= sorts; ++v) {
            filling[i][j] = v;
            rec(i, j + 1);
        }
        filling[i][j] = 0;
    };
    rec(0, 0);
    return out;
}

// ------------------------------------------------------------ tensors

namespace {

void check_lengths(const FormalTensor::Terms& terms)
{
    if (terms.empty())
        return;
    const std::size_t len = terms.begin()->first.size();
    for (const auto& [w, c] : terms) {
        if (w.size() != len)
            throw std::invalid_argument("formal tensor mixes words of different length");
    }
}

void drop_zeros(FormalTensor::Terms& terms)
{
    std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
}

}  // namespace

FormalTensor::FormalTensor(Terms terms) : terms_(std::move(terms))
{
    check_lengths(terms_);
    drop_zeros(terms_);
    *this = canonical();
}

FormalTensor FormalTensor::raw(Terms terms)
{
    check_lengths(terms);
    drop_zeros(terms);
    FormalTensor t;
    t.terms_ = std::move(terms);
    return t;
}

FormalTensor operator+(const FormalTensor& a, const FormalTensor& b)
{
    FormalTensor::Terms t = a.terms_;
    for (const auto& [w, c] : b.terms_)
        t[w] += c;
    return FormalTensor::raw(std::move(t));
}

FormalTensor operator-(const FormalTensor& a, const FormalTensor& b)
{
    return a + GR(-1) * b;
}

FormalTensor operator*(const GR& s, const FormalTensor& a)
{
    FormalTensor::Terms t = a.terms_;
    for (auto& [w, c] : t)
        c *= s;
    return FormalTensor::raw(std::move(t));
}

FormalTensor FormalTensor::canonical() const
{
    if (terms_.empty())
        return *this;
    mpz_class lcm = 1;
    for (const auto& [w, c] : terms_) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im().get_den_mpz_t());
    }
    mpz_class g = 0;
    for (const auto& [w, c] : terms_) {
        mpq_class re = c.re() * lcm;
        mpq_class im = c.im() * lcm;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re.get_num_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im.get_num_mpz_t());
    }
    mpq_class factor(lcm, g);
    factor.canonicalize();
    const GR& lead = terms_.begin()->second;
    if (sgn(lead.re()) < 0 || (sgn(lead.re()) == 0 && sgn(lead.im()) < 0))
        factor = -factor;
    return GR(factor) * *this;
}

FormalTensor FormalTensor::relabeled(std::span<const int> perm) const
{
    Terms t;
    for (const auto& [w, c] : terms_) {
        Word nw = w;
        for (int& l : nw.letters) {
            if (l < 1 || static_cast<std::size_t>(l) > perm.size())
                throw std::out_of_range("relabeled: permutation does not cover sort " + std::to_string(l));
            l = perm[static_cast<std::size_t>(l - 1)];
        }
        t[nw] += c;
    }
    return raw(std::move(t));
}

std::string FormalTensor::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            mpq_class mag = abs(c.re());
            coeff = mag == 1 ? "" : mag.get_str() + "*";
        } else {
            coeff = "(" + c.to_string() + ")*";
        }
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        os << coeff << '|' << w.to_string() << '>';
        first = false;
    }
    return os.str();
}

std::size_t tensor_rank(std::span<const FormalTensor> tensors)
{
    std::map<Word, Index> index;
    for (const auto& t : tensors)
        for (const auto& [w, c] : t.terms())
            index.emplace(w, index.size());
    const BasisTag tag = make_basis_tag(index.size());
    std::vector<SparseVec> vecs;
    for (const auto& t : tensors) {
        SparseVec v(tag);
        for (const auto& [w, c] : t.terms())
            v.add(index.at(w), c);
        vecs.push_back(std::move(v));
    }
    return rank(vecs);
}

bool same_span(std::span<const FormalTensor> a, std::span<const FormalTensor> b)
{
    std::vector<FormalTensor> both(a.begin(), a.end());
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t r = tensor_rank(both);
    return tensor_rank(a) == r && tensor_rank(b) == r;
}

namespace {

// For each group element (a permutation of positions, as image vector) call
// visit(perm, sign). The group is the product of the full symmetric groups on
// each block of positions.
void walk_block_permutations(const std::vector<std::vector<int>>& blocks, std::size_t n,
                             const std::function<void(const std::vector<int>&, int)>& visit)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t b, int sign) {
        if (b == blocks.size()) {
            visit(perm, sign);
            return;
        }
        std::vector<int> images = blocks[b];
        std::sort(images.begin(), images.end());
        do {
            // sign of the arrangement via inversion count
            int inversions = 0;
            for (std::size_t x = 0; x < images.size(); ++x)
                for (std::size_t y = x + 1; y < images.size(); ++y)
                    inversions += images[x] > images[y] ? 1 : 0;
            auto sorted = blocks[b];
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t x = 0; x < sorted.size(); ++x)
                perm[static_cast<std::size_t>(sorted[x])] = images[x];
            rec(b + 1, (inversions % 2 == 0) ? sign : -sign);
        } while (std::next_permutation(images.begin(), images.end()));
        for (int x : blocks[b])
            perm[static_cast<std::size_t>(x)] = x;
    };
    rec(0, 1);
}

Word permute(const Word& w, const std::vector<int>& perm)
{
    Word out = w;
    for (std::size_t k = 0; k < w.size(); ++k)
        out.letters[static_cast<std::size_t>(perm[k])] = w.letters[k];
    return out;
}

}  // namespace

FormalTensor scheme_tensor(const StandardTableau& t, const StandardScheme& s)
{
    if (!(t.shape == s.shape))
        throw std::invalid_argument("scheme_tensor: tableau shape " + t.shape.to_string() +
                                    " differs from scheme shape " + s.shape.to_string());
    const auto& rows = t.shape.rows();
    const std::size_t n = static_cast<std::size_t>(t.shape.size());

    Word word;
    word.letters.assign(n, 0);
    std::vector<std::vector<int>> row_blocks(rows.size());
    std::vector<std::vector<int>> col_blocks(static_cast<std::size_t>(rows.front()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(rows[i]); ++j) {
            const int pos = t.filling[i][j] - 1;
            word.letters[static_cast<std::size_t>(pos)] = s.filling[i][j];
            row_blocks[i].push_back(pos);
            col_blocks[j].push_back(pos);
        }
    }

    std::map<Word, GR> symmetrized;
    walk_block_permutations(row_blocks, n, [&](const std::vector<int>& perm, int) {
        symmetrized[permute(word, perm)] += GR(1);
    });
    std::map<Word, GR> result;
    walk_block_permutations(col_blocks, n, [&](const std::vector<int>& perm, int sign) {
        for (const auto& [w, c] : symmetrized)
            result[permute(w, perm)] += GR(sign) * c;
    });
    FormalTensor out(std::move(result));
    if (out.is_zero())
        throw std::invalid_argument("scheme_tensor: symmetrizer annihilates scheme " + filling_to_string(s.filling));
    return out;
}

FormalTensor mixed_tensor(const Word& w)
{
    if (w.size() != 3)
        throw std::invalid_argument("mixed_tensor: expects a three-letter word");
    std::vector<int> letters = w.letters;
    std::sort(letters.begin(), letters.end());
    const bool one_repeat = (letters[0] == letters[1]) != (letters[1] == letters[2]);
    if (!one_repeat)
        throw std::invalid_argument("mixed_tensor: word must contain exactly one repeated letter");
    FormalTensor::Terms terms;
    do {
        Word v(letters);
        terms[v] = (v == w) ? GR(2) : GR(-1);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return FormalTensor::raw(std::move(terms));
}

Report formal_dependence_check()
{
    Report report;
    report.name = "formal_dependence";
    const FormalTensor p112 = mixed_tensor({1, 1, 2});
    const FormalTensor p121 = mixed_tensor({1, 2, 1});
    const FormalTensor p211 = mixed_tensor({2, 1, 1});

    const FormalTensor sum = p121 + p112 + p211;
    report.add("psi121 = -psi112 - psi211", sum.is_zero(), "psi121 + psi112 + psi211 = " + sum.to_string());
    report.add("psi112 != 0", !p112.is_zero(), p112.to_string());

    const std::vector<int> swap12{2, 1};
    const FormalTensor m121 = p121.relabeled(swap12);
    const FormalTensor m112 = p112.relabeled(swap12);
    const FormalTensor m211 = p211.relabeled(swap12);
    const bool images_match =
        m121 == mixed_tensor({2, 1, 2}) && m112 == mixed_tensor({2, 2, 1}) && m211 == mixed_tensor({1, 2, 2});
    const FormalTensor mirrored = m121 + m112 + m211;
    report.add("mirror: psi212 = -psi221 - psi122", images_match && mirrored.is_zero(),
               "psi212 + psi221 + psi122 = " + mirrored.to_string());
    return report;
}

}  // namespace parafock::young
