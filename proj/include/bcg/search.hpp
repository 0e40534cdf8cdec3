#pragma once

// Backtracking solver for systems of linear equations over a finite abelian
// group, used for cocycle enumeration and coboundary-witness search.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "bcg/abgroup.hpp"

namespace bcg {

struct SearchOptions {
    std::uint64_t max_candidates = 1'000'000;
    /// Worker threads; results do not depend on this value.
    unsigned parallel = 1;
};

namespace detail {

/// Arithmetic of a finite group on element indices.
class IndexedGroup {
public:
    explicit IndexedGroup(const FgAbGroup& group);

    const FgAbGroup& group() const { return group_; }
    std::size_t size() const { return elements_.size(); }
    std::size_t add(std::size_t a, std::size_t b) const { return add_[a * elements_.size() + b]; }
    std::size_t neg(std::size_t a) const { return neg_[a]; }
    const Element& element(std::size_t i) const { return elements_[i]; }
    std::size_t index(const Element& x) const { return group_.index_of(x); }

private:
    FgAbGroup group_;
    std::vector<Element> elements_;
    std::vector<std::size_t> add_;
    std::vector<std::size_t> neg_;
};

/// sum(sign * x_var) = rhs, signs are +1 or -1.
struct LinearEquation {
    std::vector<std::pair<std::size_t, int>> terms;
    std::size_t rhs = 0;
};

class LinearSearch {
public:
    LinearSearch(const IndexedGroup& group, std::size_t variables, std::vector<LinearEquation> equations);

    /// |M|^variables, saturating at UINT64_MAX.
    std::uint64_t candidate_count() const;

    /// Solutions in lexicographic order of (x_0, x_1, ...). `limit` = 0 means
    /// all solutions.
    std::vector<std::vector<std::size_t>> solve(std::size_t limit, unsigned parallel) const;

private:
    bool check(std::size_t level, const std::vector<std::size_t>& values) const;
    void descend(std::size_t level, std::vector<std::size_t>& values, std::vector<std::vector<std::size_t>>& out,
                 std::size_t limit) const;

    const IndexedGroup& group_;
    std::size_t variables_;
    std::vector<LinearEquation> equations_;
    // Equations checked once the given variable (their last one) is assigned.
    std::vector<std::vector<std::size_t>> due_;
    bool constants_ok_ = true;
};

}  // namespace detail

}  // namespace bcg
