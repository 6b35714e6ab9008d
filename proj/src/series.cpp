#include "homlie/series.hpp"

#include <algorithm>

namespace homlie {

std::string to_string(SeriesKind kind)
{
    return kind == SeriesKind::derived ? "derived" : "lower-central";
}

SeriesReport compute_series(const HomLieAlgebra& L, SeriesKind kind, std::optional<std::size_t> max_steps)
{
    require_multiplicative(L, to_string(kind) + " series");
    const std::size_t limit = max_steps.value_or(L.dim() + 1);
    const Subspace full = Subspace::full(L.dim());

    SeriesReport report{kind, {full}, {full.dim()}};
    while (true) {
        const Subspace& current = report.chain.back();
        const std::size_t index = report.chain.size() - 1;
        if (current.is_zero()) {
            report.verdict = SeriesVerdict::klass(index);
            return report;
        }
        if (index >= 1 && current == report.chain[index - 1]) {
            report.verdict = SeriesVerdict::not_terminating(index - 1);
            return report;
        }
        if (index >= limit)
            throw StepLimitExceeded(to_string(kind) + " series undecided after " + std::to_string(limit) + " steps");

        Subspace next = kind == SeriesKind::derived ? bracket_subspaces(L, current, current)
                                                    : bracket_subspaces(L, full, current);
        if (!is_subspace_of(next, current))
            throw SeriesInternalError(to_string(kind) + " series term " + std::to_string(index + 1) +
                                      " is not contained in term " + std::to_string(index));
        report.dims.push_back(next.dim());
        report.chain.push_back(std::move(next));
    }
}

SeriesReport derived_series(const HomLieAlgebra& L, std::optional<std::size_t> max_steps)
{
    return compute_series(L, SeriesKind::derived, max_steps);
}

SeriesReport lower_central_series(const HomLieAlgebra& L, std::optional<std::size_t> max_steps)
{
    return compute_series(L, SeriesKind::lower_central, max_steps);
}

SeriesVerdict solvable_class(const HomLieAlgebra& L)
{
    return derived_series(L).verdict;
}

SeriesVerdict nilpotent_class(const HomLieAlgebra& L)
{
    return lower_central_series(L).verdict;
}

namespace {

void validate_chain(const HomLieAlgebra& L, const std::vector<Subspace>& chain)
{
    if (chain.empty())
        throw MalformedChain("series is empty");
    for (const auto& term : chain)
        if (term.ambient_dim() != L.dim())
            throw MalformedChain("series term lives in F^" + std::to_string(term.ambient_dim()) +
                                 ", algebra has dimension " + std::to_string(L.dim()));
    if (!chain.front().is_full())
        throw MalformedChain("series must start at the full algebra");
    if (!chain.back().is_zero())
        throw MalformedChain("series must end at the zero subspace");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!is_subspace_of(chain[i + 1], chain[i]))
            throw MalformedChain("series is not descending at index " + std::to_string(i + 1));
}

} // namespace

bool is_solvable_series(const HomLieAlgebra& L, const std::vector<Subspace>& chain)
{
    validate_chain(L, chain);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!is_subspace_of(bracket_subspaces(L, chain[i], chain[i]), chain[i + 1]))
            return false;
    return true;
}

bool is_central_series(const HomLieAlgebra& L, const std::vector<Subspace>& chain)
{
    validate_chain(L, chain);
    const Subspace full = Subspace::full(L.dim());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!is_subspace_of(bracket_subspaces(L, full, chain[i]), chain[i + 1]))
            return false;
    return true;
}

} // namespace homlie
