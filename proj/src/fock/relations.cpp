#include "parafock/fock.hpp"

#include <sstream>

namespace parafock::fock {

namespace {

std::string describe_offender(const FockBasis& basis, const SparseOp& residual, std::span<const Index> cols)
{
    auto worst = worst_element(residual, cols);
    if (!worst)
        return {};
    std::ostringstream os;
    os << "residual " << worst->value << " at row " << basis.label(worst->row) << ", column "
       << basis.label(worst->col);
    return os.str();
}

class RelationChecker {
public:
    RelationChecker(const ParaboseAlgebra& alg, int depth, Report& report)
        : alg_(alg), cols_(alg.basis().interior(depth)), report_(report)
    {
        if (cols_.empty())
            throw std::invalid_argument("interior(" + std::to_string(depth) + ") is empty for n_max = " +
                                        std::to_string(alg.basis().config().max_urs));
    }

    /// Checks bracket(x, y) == rhs on the interior.
    void bracket(const std::string& id, const SparseOp& x, const SparseOp& y, bool anti, const SparseOp* rhs)
    {
        SparseOp residual = commutator_on(x, y, cols_, anti);
        if (rhs)
            residual -= rhs->restricted(cols_);
        record(id, residual);
    }

    void record(const std::string& id, const SparseOp& residual)
    {
        bool ok = true;
        for (Index j : cols_) {
            if (!residual.column(j).empty()) {
                ok = false;
                break;
            }
        }
        report_.add(id, ok, ok ? std::string() : describe_offender(alg_.basis(), residual, cols_));
    }

private:
    const ParaboseAlgebra& alg_;
    std::vector<Index> cols_;
    Report& report_;
};

std::string idx(int x)
{
    return std::to_string(x);
}

}  // namespace

Report verify_green_relations(const ParaboseAlgebra& alg, int depth)
{
    const auto& cfg = alg.basis().config();
    Report report;
    report.name = "green(R=" + idx(cfg.sorts) + ",p=" + idx(cfg.order) + ",nmax=" + idx(cfg.max_urs) + ")";
    RelationChecker check(alg, depth, report);
    const int R = cfg.sorts;
    const int p = cfg.order;
    const SparseOp& one = alg.identity();

    for (int r = 1; r <= R; ++r) {
        for (int s = 1; s <= R; ++s) {
            for (int t = 1; t <= R; ++t) {
                const std::string st = idx(s) + idx(t);
                check.bracket("[a_" + idx(r) + ",tau_" + st + "]=" + (r == s ? "a_" + idx(t) : "0"), alg.a(r),
                              alg.tau(s, t), false, r == s ? &alg.a(t) : nullptr);
                if (s <= t) {
                    check.bracket("[a_" + idx(r) + ",alpha_" + st + "]=0", alg.a(r), alg.alpha(s, t), false,
                                  nullptr);
                    check.bracket("[a+_" + idx(r) + ",alpha+_" + st + "]=0", alg.a_dag(r), alg.alpha_dag(s, t),
                                  false, nullptr);
                }
            }
        }
    }

    auto comp = [](int r, int al, bool dag) { return "b" + idx(r) + "^(" + idx(al) + ")" + (dag ? "+" : ""); };
    for (int al = 1; al <= p; ++al) {
        for (int be = 1; be <= p; ++be) {
            for (int r = 1; r <= R; ++r) {
                for (int s = 1; s <= R; ++s) {
                    const SparseOp& br = alg.b(r, al, Ladder::annihilate);
                    const SparseOp& br_dag = alg.b(r, al, Ladder::create);
                    const SparseOp& bs = alg.b(s, be, Ladder::annihilate);
                    const SparseOp& bs_dag = alg.b(s, be, Ladder::create);
                    if (al == be) {
                        check.bracket("[" + comp(r, al, false) + "," + comp(s, be, true) + "]=" + (r == s ? "1" : "0"),
                                      br, bs_dag, false, r == s ? &one : nullptr);
                        check.bracket("[" + comp(r, al, true) + "," + comp(s, be, true) + "]=0", br_dag, bs_dag,
                                      false, nullptr);
                        check.bracket("[" + comp(r, al, false) + "," + comp(s, be, false) + "]=0", br, bs, false,
                                      nullptr);
                    } else {
                        check.bracket("{" + comp(r, al, false) + "," + comp(s, be, true) + "}=0", br, bs_dag, true,
                                      nullptr);
                        check.bracket("{" + comp(r, al, false) + "," + comp(s, be, false) + "}=0", br, bs, true,
                                      nullptr);
                        check.bracket("{" + comp(r, al, true) + "," + comp(s, be, true) + "}=0", br_dag, bs_dag, true,
                                      nullptr);
                    }
                }
            }
        }
    }

    const SparseVec omega = alg.vacuum();
    for (int r = 1; r <= R; ++r) {
        for (int al = 1; al <= p; ++al) {
            bool ok = op_apply(alg.b(r, al, Ladder::annihilate), omega).empty();
            report.add(comp(r, al, false) + "|Omega>=0", ok);
        }
    }
    for (int r = 1; r <= R; ++r) {
        for (int s = 1; s <= R; ++s) {
            SparseVec lhs = op_apply(alg.a(r), op_apply(alg.a_dag(s), omega));
            SparseVec rhs = (r == s) ? GR(p) * omega : SparseVec(alg.tag());
            bool ok = lhs == rhs;
            report.add("a_" + idx(r) + " a+_" + idx(s) + "|Omega>=" + (r == s ? idx(p) + "|Omega>" : "0"), ok,
                       ok ? std::string() : "got " + std::to_string(lhs.size()) + " nonzero components");
        }
    }
    return report;
}

}  // namespace parafock::fock
