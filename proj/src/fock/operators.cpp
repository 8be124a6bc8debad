#include "parafock/fock.hpp"

#include "parafock/exactalg/linear.hpp"

#include <algorithm>

namespace parafock::fock {

namespace {

int klein_sign(const FockBasis& basis, const OccVector& occ, int alpha)
{
    const auto& cfg = basis.config();
    int parity = 0;
    for (int beta = 1; beta < alpha; ++beta)
        for (int r = 1; r <= cfg.sorts; ++r)
            parity += occ[basis.mode(r, beta)];
    return (parity % 2 == 0) ? 1 : -1;
}

SparseOp half_anticommutator(const SparseOp& x, const SparseOp& y)
{
    SparseOp out = x * y;
    out += y * x;
    out *= GR::rational(1, 2);
    return out;
}

}  // namespace

SparseOp green_op(const FockBasis& basis, int r, int alpha, Ladder kind)
{
    const std::size_t m = basis.mode(r, alpha);
    const bool create = kind == Ladder::create;
    SparseOp op(basis.tag(), {create ? 1 : -1});
    OccVector target;
    for (Index j = 0; j < basis.size(); ++j) {
        const OccVector& occ = basis.state(j);
        if (!create && occ[m] == 0)
            continue;
        target = occ;
        target[m] += create ? 1 : -1;
        auto i = basis.index_of(target);
        if (!i)
            continue;  // beyond the cutoff
        const long magnitude = create ? occ[m] + 1 : 1;
        op.add(*i, j, GR(magnitude * klein_sign(basis, occ, alpha)));
    }
    return op;
}

ParaboseAlgebra::ParaboseAlgebra(std::shared_ptr<const FockBasis> basis) : basis_(std::move(basis))
{
    const int R = sorts();
    const int p = order();
    const BasisTag tag = basis_->tag();
    identity_ = SparseOp::identity(tag);

    for (int r = 1; r <= R; ++r) {
        SparseOp ar(tag, {-1});
        SparseOp ar_dag(tag, {1});
        for (int alpha = 1; alpha <= p; ++alpha) {
            b_annihilate_.push_back(green_op(*basis_, r, alpha, Ladder::annihilate));
            b_create_.push_back(green_op(*basis_, r, alpha, Ladder::create));
            ar += b_annihilate_.back();
            ar_dag += b_create_.back();
        }
        a_.push_back(std::move(ar));
        a_dag_.push_back(std::move(ar_dag));
    }

    alpha_.resize(static_cast<std::size_t>(R * R));
    alpha_dag_.resize(static_cast<std::size_t>(R * R));
    tau_.resize(static_cast<std::size_t>(R * R));
    for (int r = 1; r <= R; ++r) {
        for (int s = 1; s <= R; ++s) {
            tau_[pair_slot(r, s)] = half_anticommutator(a_dag(r), a(s));
            if (s < r) {
                alpha_[pair_slot(r, s)] = alpha_[pair_slot(s, r)];
                alpha_dag_[pair_slot(r, s)] = alpha_dag_[pair_slot(s, r)];
            } else {
                alpha_[pair_slot(r, s)] = half_anticommutator(a(r), a(s));
                alpha_dag_[pair_slot(r, s)] = half_anticommutator(a_dag(r), a_dag(s));
            }
        }
    }

    total_number_ = SparseOp::zero(tag, {0});
    for (int r = 1; r <= R; ++r) {
        SparseOp nr = tau(r, r);
        nr -= GR::rational(p, 2) * identity_;
        total_number_ += nr;
        number_.push_back(std::move(nr));
    }
}

void ParaboseAlgebra::check_sort(int r) const
{
    if (r < 1 || r > sorts())
        throw std::out_of_range("sort " + std::to_string(r) + " outside 1.." + std::to_string(sorts()));
}

std::size_t ParaboseAlgebra::pair_slot(int r, int s) const
{
    check_sort(r);
    check_sort(s);
    return static_cast<std::size_t>((r - 1) * sorts() + (s - 1));
}

const SparseOp& ParaboseAlgebra::b(int r, int alpha, Ladder kind) const
{
    const std::size_t m = basis_->mode(r, alpha);
    return kind == Ladder::create ? b_create_[m] : b_annihilate_[m];
}

const SparseOp& ParaboseAlgebra::a(int r) const
{
    check_sort(r);
    return a_[static_cast<std::size_t>(r - 1)];
}

const SparseOp& ParaboseAlgebra::a_dag(int r) const
{
    check_sort(r);
    return a_dag_[static_cast<std::size_t>(r - 1)];
}

const SparseOp& ParaboseAlgebra::bilinear(BilinearKind kind, int r, int s) const
{
    const std::size_t slot = pair_slot(r, s);
    switch (kind) {
    case BilinearKind::alpha:
        return alpha_[slot];
    case BilinearKind::alpha_dag:
        return alpha_dag_[slot];
    case BilinearKind::tau:
        break;
    }
    return tau_[slot];
}

const SparseOp& ParaboseAlgebra::number(int r) const
{
    check_sort(r);
    return number_[static_cast<std::size_t>(r - 1)];
}

SparseVec ParaboseAlgebra::vacuum() const
{
    return SparseVec::unit(tag(), 0);
}

SparseVec ParaboseAlgebra::monomial_state(const Word& w) const
{
    if (static_cast<int>(w.size()) > basis_->config().max_urs)
        throw std::invalid_argument("word |" + w.to_string() + "> is longer than n_max = " +
                                    std::to_string(basis_->config().max_urs));
    for (int r : w.letters)
        check_sort(r);
    SparseVec v = vacuum();
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        v = op_apply(a_dag(*it), v);
    return v;
}

SparseVec ParaboseAlgebra::monomial_image(const std::map<Word, GR>& terms) const
{
    SparseVec out(tag());
    for (const auto& [w, c] : terms)
        out.axpy(c, monomial_state(w));
    return out;
}

ParaOps para_ops(const ParaboseAlgebra& alg)
{
    ParaOps ops;
    for (int r = 1; r <= alg.sorts(); ++r) {
        ops.a.push_back(alg.a(r));
        ops.a_dag.push_back(alg.a_dag(r));
    }
    return ops;
}

SparseOp bilinear(const ParaboseAlgebra& alg, BilinearKind kind, int r, int s)
{
    return alg.bilinear(kind, r, s);
}

NumberOps number_ops(const ParaboseAlgebra& alg)
{
    NumberOps ops;
    for (int r = 1; r <= alg.sorts(); ++r)
        ops.per_sort.push_back(alg.number(r));
    ops.total = alg.number();
    return ops;
}

SparseVec monomial_state(const ParaboseAlgebra& alg, const Word& w)
{
    return alg.monomial_state(w);
}

std::size_t physical_span(const ParaboseAlgebra& alg, std::vector<int> content)
{
    std::sort(content.begin(), content.end());
    std::vector<SparseVec> states;
    do {
        states.push_back(alg.monomial_state(Word(content)));
    } while (std::next_permutation(content.begin(), content.end()));
    return rank(states);
}

SparseVec psi121_from_creators(const ParaboseAlgebra& alg)
{
    const SparseOp& c1 = alg.a_dag(1);
    const SparseOp& c2 = alg.a_dag(2);
    SparseOp sym = c1 * c1 * c2;
    sym += c2 * c1 * c1;
    SparseOp expr = c1 * c2 * c1;
    expr -= GR::rational(1, 2) * sym;
    expr *= GR::rational(1, 8);
    return op_apply(expr, alg.vacuum());
}

}  // namespace parafock::fock
