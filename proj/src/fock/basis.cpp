#include "parafock/fock.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

namespace parafock::fock {

void ModeConfig::validate() const
{
    if (sorts < 1)
        throw std::invalid_argument("number of sorts R must be >= 1, got " + std::to_string(sorts));
    if (order < 1)
        throw std::invalid_argument("parabose order p must be >= 1, got " + std::to_string(order));
    if (max_urs < 1)
        throw std::invalid_argument("ur-number cutoff n_max must be >= 1, got " + std::to_string(max_urs));
}

std::size_t max_basis_size()
{
    constexpr std::size_t fallback = 250000;
    const char* env = std::getenv("PARAFOCK_MAX_BASIS");
    if (env == nullptr || *env == '\0')
        return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw std::invalid_argument(std::string("PARAFOCK_MAX_BASIS must be a positive integer, got '") + env + "'");
    return static_cast<std::size_t>(v);
}

std::size_t count_states(const ModeConfig& config)
{
    config.validate();
    constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
    const std::size_t k = static_cast<std::size_t>(config.modes()) - 1;
    std::size_t total = 0;
    for (int n = 0; n <= config.max_urs; ++n) {
        // C(n + k, k) built incrementally; each partial product is itself a
        // binomial coefficient, so the division is exact.
        unsigned __int128 c = 1;
        for (std::size_t j = 1; j <= k; ++j) {
            c = c * (static_cast<std::size_t>(n) + j) / j;
            if (c > cap)
                return cap;
        }
        if (total > cap - static_cast<std::size_t>(c))
            return cap;
        total += static_cast<std::size_t>(c);
    }
    return total;
}

BasisTooLarge::BasisTooLarge(std::size_t size, std::size_t limit)
    : std::runtime_error("basis size " + std::to_string(size) + " exceeds the limit " + std::to_string(limit) +
                         " (set PARAFOCK_MAX_BASIS to raise it)"),
      size_(size)
{
}

namespace {

void enumerate_shell(int remaining, std::size_t pos, OccVector& occ, std::vector<OccVector>& out)
{
    if (pos + 1 == occ.size()) {
        occ[pos] = remaining;
        out.push_back(occ);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        occ[pos] = v;
        enumerate_shell(remaining - v, pos + 1, occ, out);
    }
    occ[pos] = 0;
}

}  // namespace

FockBasis::FockBasis(ModeConfig config, std::size_t limit) : config_(config)
{
    config_.validate();
    const std::size_t expected = count_states(config_);
    if (expected > limit)
        throw BasisTooLarge(expected, limit);

    states_.reserve(expected);
    OccVector occ(static_cast<std::size_t>(config_.modes()), 0);
    for (int n = 0; n <= config_.max_urs; ++n) {
        const std::size_t first = states_.size();
        enumerate_shell(n, 0, occ, states_);
        shells_.insert(shells_.end(), states_.size() - first, n);
    }
    for (Index i = 0; i < states_.size(); ++i)
        index_.emplace(states_[i], i);
    tag_ = make_basis_tag(states_.size());
}

std::optional<Index> FockBasis::index_of(const OccVector& occ) const
{
    auto it = index_.find(occ);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t FockBasis::mode(int r, int alpha) const
{
    if (r < 1 || r > config_.sorts)
        throw std::out_of_range("sort " + std::to_string(r) + " outside 1.." + std::to_string(config_.sorts));
    if (alpha < 1 || alpha > config_.order)
        throw std::out_of_range("Green component " + std::to_string(alpha) + " outside 1.." +
                                std::to_string(config_.order));
    return static_cast<std::size_t>((r - 1) * config_.order + (alpha - 1));
}

int FockBasis::sort_occupation(Index i, int r) const
{
    int total = 0;
    for (int alpha = 1; alpha <= config_.order; ++alpha)
        total += states_.at(i)[mode(r, alpha)];
    return total;
}

std::vector<Index> FockBasis::interior(int depth) const
{
    std::vector<Index> out;
    const int limit = config_.max_urs - depth;
    for (Index i = 0; i < states_.size() && shells_[i] <= limit; ++i)
        out.push_back(i);
    return out;
}

std::vector<Index> FockBasis::shell_indices(int n) const
{
    std::vector<Index> out;
    for (Index i = 0; i < states_.size(); ++i) {
        if (shells_[i] == n)
            out.push_back(i);
    }
    return out;
}

std::string FockBasis::label(Index i) const
{
    const auto& occ = states_.at(i);
    std::ostringstream os;
    os << '(';
    for (int r = 1; r <= config_.sorts; ++r) {
        if (r > 1)
            os << '|';
        for (int alpha = 1; alpha <= config_.order; ++alpha) {
            if (alpha > 1)
                os << ',';
            os << occ[mode(r, alpha)];
        }
    }
    os << ')';
    return os.str();
}

std::shared_ptr<const FockBasis> build_basis(const ModeConfig& config)
{
    return std::make_shared<const FockBasis>(config);
}

}  // namespace parafock::fock
