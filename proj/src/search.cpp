#include "bcg/search.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace bcg::detail {

IndexedGroup::IndexedGroup(const FgAbGroup& group) : group_(group), elements_(enumerate(group)) {
    const std::size_t n = elements_.size();
    add_.resize(n * n);
    neg_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        neg_[a] = group_.index_of(-elements_[a]);
        for (std::size_t b = 0; b < n; ++b) add_[a * n + b] = group_.index_of(elements_[a] + elements_[b]);
    }
}

LinearSearch::LinearSearch(const IndexedGroup& group, std::size_t variables, std::vector<LinearEquation> equations)
    : group_(group), variables_(variables), equations_(std::move(equations)), due_(variables) {
    for (std::size_t e = 0; e < equations_.size(); ++e) {
        const auto& eq = equations_[e];
        if (eq.terms.empty()) {
            if (eq.rhs != 0) constants_ok_ = false;
            continue;
        }
        std::size_t last = 0;
        for (const auto& [var, sign] : eq.terms) last = std::max(last, var);
        due_[last].push_back(e);
    }
}

std::uint64_t LinearSearch::candidate_count() const {
    std::uint64_t total = 1;
    for (std::size_t v = 0; v < variables_; ++v) {
        if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(group_.size()), &total)) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return total;
}

bool LinearSearch::check(std::size_t level, const std::vector<std::size_t>& values) const {
    for (const auto e : due_[level]) {
        const auto& eq = equations_[e];
        std::size_t acc = 0;
        for (const auto& [var, sign] : eq.terms) {
            acc = group_.add(acc, sign > 0 ? values[var] : group_.neg(values[var]));
        }
        if (acc != eq.rhs) return false;
    }
    return true;
}

void LinearSearch::descend(std::size_t level, std::vector<std::size_t>& values,
                           std::vector<std::vector<std::size_t>>& out, std::size_t limit) const {
    if (level == variables_) {
        out.push_back(values);
        return;
    }
    for (std::size_t v = 0; v < group_.size(); ++v) {
        values[level] = v;
        if (!check(level, values)) continue;
        descend(level + 1, values, out, limit);
        if (limit != 0 && out.size() >= limit) return;
    }
}

std::vector<std::vector<std::size_t>> LinearSearch::solve(std::size_t limit, unsigned parallel) const {
    std::vector<std::vector<std::size_t>> out;
    if (!constants_ok_) return out;
    if (variables_ == 0) {
        out.emplace_back();
        return out;
    }
    const std::size_t n = group_.size();
    // One bucket per value of x_0; buckets are filled independently and then
    // concatenated in order, which keeps the output independent of `parallel`.
    std::vector<std::vector<std::vector<std::size_t>>> buckets(n);
    auto work = [&](std::size_t first) {
        std::vector<std::size_t> values(variables_, 0);
        values[0] = first;
        if (check(0, values)) descend(1, values, buckets[first], limit);
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(parallel, static_cast<unsigned>(n)));
    if (workers == 1) {
        std::size_t found = 0;
        for (std::size_t v = 0; v < n; ++v) {
            work(v);
            found += buckets[v].size();
            if (limit != 0 && found >= limit) break;
        }
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t v = w; v < n; v += workers) work(v);
            });
        }
        for (auto& t : pool) t.join();
    }
    for (auto& b : buckets) {
        for (auto& s : b) {
            out.push_back(std::move(s));
            if (limit != 0 && out.size() >= limit) return out;
        }
    }
    return out;
}

}  // namespace bcg::detail
