#pragma once

#include "homlie/algebra.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace homlie {

enum class SeriesKind { derived, lower_central };

std::string to_string(SeriesKind kind);

/*
 * Outcome of a series computation.
 *
 *   Class(k)             chain[k] = 0 and chain[k-1] != 0 (k = 0 only for the zero algebra)
 *   NotTerminating(s)    chain[s+1] = chain[s] != 0, so every later term equals chain[s]
 */
class SeriesVerdict {
public:
    static SeriesVerdict klass(std::size_t k) { return SeriesVerdict(true, k); }
    static SeriesVerdict not_terminating(std::size_t stabilized_at) { return SeriesVerdict(false, stabilized_at); }

    bool terminates() const { return terminates_; }
    /// The class k; only meaningful when terminates().
    std::size_t class_index() const { return index_; }
    /// Index of the first repeated term; only meaningful when !terminates().
    std::size_t stabilized_at() const { return index_; }
    /// Class as an optional: nullopt means not solvable / not nilpotent.
    std::optional<std::size_t> as_class() const
    {
        return terminates_ ? std::optional<std::size_t>(index_) : std::nullopt;
    }

    friend bool operator==(const SeriesVerdict&, const SeriesVerdict&) = default;

private:
    SeriesVerdict(bool terminates, std::size_t index) : terminates_(terminates), index_(index) {}
    bool terminates_;
    std::size_t index_;
};

struct SeriesReport {
    SeriesKind kind;
    std::vector<Subspace> chain;
    std::vector<std::size_t> dims;
    SeriesVerdict verdict = SeriesVerdict::klass(0);

    /// The i-th term, extended past the end by the last (stable) term.
    const Subspace& term(std::size_t i) const { return chain[std::min(i, chain.size() - 1)]; }
};

/// A descending chain failed its own containment; carries the offending index.
class SeriesInternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The step bound was reached before the series reached zero or repeated.
class StepLimitExceeded : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/*
 * Both series iterate a deterministic map on canonical subspaces starting at
 * the full space, and stop at the zero subspace or at the first repeated term.
 * With n = dim L at most n+1 steps are ever needed; max_steps caps the number
 * of bracket steps and defaults to that bound.
 */
SeriesReport derived_series(const HomLieAlgebra& L, std::optional<std::size_t> max_steps = std::nullopt);
SeriesReport lower_central_series(const HomLieAlgebra& L, std::optional<std::size_t> max_steps = std::nullopt);
SeriesReport compute_series(const HomLieAlgebra& L, SeriesKind kind,
                            std::optional<std::size_t> max_steps = std::nullopt);

SeriesVerdict solvable_class(const HomLieAlgebra& L);
SeriesVerdict nilpotent_class(const HomLieAlgebra& L);

/// The chain given to a series validator is not a descending chain from L to 0.
class MalformedChain : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// [L_i, L_i] ⊆ L_{i+1} for every step.
bool is_solvable_series(const HomLieAlgebra& L, const std::vector<Subspace>& chain);
/// [L, L_i] ⊆ L_{i+1} for every step.
bool is_central_series(const HomLieAlgebra& L, const std::vector<Subspace>& chain);

} // namespace homlie
