#include "bcg/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "bcg/error.hpp"

namespace bcg {

namespace detail {

std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in group addition");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in scalar multiple");
    return out;
}

}  // namespace detail

namespace {

std::shared_ptr<const std::vector<std::int64_t>> checked_orders(std::vector<std::int64_t> orders) {
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] != 0 && orders[i] < 2) {
            throw InvalidGroup("generator " + std::to_string(i) + " has order " + std::to_string(orders[i]) +
                               "; orders must be 0 (free) or at least 2");
        }
    }
    return std::make_shared<const std::vector<std::int64_t>>(std::move(orders));
}

void require_same(const FgAbGroup& a, const FgAbGroup& b) {
    if (!(a == b)) throw GroupMismatch("elements of " + a.to_string() + " and " + b.to_string() + " combined");
}

// Odometer over per-coordinate ranges [lo_i, hi_i], last coordinate fastest.
std::vector<Element> box(const FgAbGroup& group, const std::vector<std::int64_t>& lo,
                         const std::vector<std::int64_t>& hi) {
    std::vector<Element> out;
    std::vector<std::int64_t> cur = lo;
    const std::size_t r = lo.size();
    for (;;) {
        out.emplace_back(group, cur);
        std::size_t i = r;
        while (i > 0) {
            --i;
            if (cur[i] < hi[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lo[i];
            if (i == 0) return out;
        }
        if (r == 0) return out;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// FgAbGroup

FgAbGroup::FgAbGroup() : orders_(std::make_shared<const std::vector<std::int64_t>>()) {}

FgAbGroup::FgAbGroup(std::vector<std::int64_t> orders) : orders_(checked_orders(std::move(orders))) {}

FgAbGroup FgAbGroup::cyclic(std::int64_t n) { return FgAbGroup({n}); }

FgAbGroup FgAbGroup::free(std::size_t rank) { return FgAbGroup(std::vector<std::int64_t>(rank, 0)); }

bool FgAbGroup::is_finite() const {
    return std::none_of(orders_->begin(), orders_->end(), [](std::int64_t n) { return n == 0; });
}

bool FgAbGroup::is_free() const {
    return std::all_of(orders_->begin(), orders_->end(), [](std::int64_t n) { return n == 0; });
}

std::uint64_t FgAbGroup::cardinality() const {
    if (!is_finite()) throw InfiniteGroup(to_string() + " is infinite");
    std::uint64_t size = 1;
    for (auto n : *orders_) {
        if (__builtin_mul_overflow(size, static_cast<std::uint64_t>(n), &size)) {
            throw SearchSpaceTooLarge(to_string() + " is too large to index");
        }
    }
    return size;
}

Element FgAbGroup::zero() const { return Element(*this, std::vector<std::int64_t>(rank(), 0)); }

Element FgAbGroup::generator(std::size_t i) const {
    std::vector<std::int64_t> c(rank(), 0);
    c.at(i) = 1;
    return Element(*this, std::move(c));
}

Element FgAbGroup::make(std::vector<std::int64_t> coeffs) const { return Element(*this, std::move(coeffs)); }

std::size_t FgAbGroup::index_of(const Element& x) const {
    require_same(*this, x.group());
    if (!is_finite()) throw InfiniteGroup(to_string() + " is infinite");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) idx = idx * static_cast<std::size_t>(order(i)) + static_cast<std::size_t>(x[i]);
    return idx;
}

Element FgAbGroup::element_at(std::size_t index) const {
    const auto n = cardinality();
    if (index >= n) throw std::out_of_range("element index " + std::to_string(index) + " out of range");
    std::vector<std::int64_t> c(rank(), 0);
    for (std::size_t i = rank(); i > 0; --i) {
        const auto ord = static_cast<std::size_t>(order(i - 1));
        c[i - 1] = static_cast<std::int64_t>(index % ord);
        index /= ord;
    }
    return Element(*this, std::move(c));
}

std::string FgAbGroup::to_string() const {
    if (orders_->empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (i) os << " + ";
        if (order(i) == 0)
            os << "Z";
        else
            os << "Z/" << order(i);
    }
    return os.str();
}

bool operator==(const FgAbGroup& a, const FgAbGroup& b) {
    return a.orders_ == b.orders_ || *a.orders_ == *b.orders_;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(FgAbGroup group, std::vector<std::int64_t> coeffs) : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_.rank()) {
        throw InvalidGroup("element has " + std::to_string(coeffs_.size()) + " coefficients but " +
                           group_.to_string() + " has rank " + std::to_string(group_.rank()));
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (const auto n = group_.order(i); n != 0) coeffs_[i] = detail::mod(coeffs_[i], n);
    }
}

bool Element::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t v) { return v == 0; });
}

Element& Element::operator+=(const Element& other) {
    require_same(group_, other.group_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const auto n = group_.order(i);
        if (n == 0) {
            coeffs_[i] = detail::checked_add(coeffs_[i], other.coeffs_[i]);
        } else {
            coeffs_[i] += other.coeffs_[i];
            if (coeffs_[i] >= n) coeffs_[i] -= n;
        }
    }
    return *this;
}

Element& Element::operator-=(const Element& other) { return *this += -other; }

Element Element::operator+(const Element& other) const {
    Element out = *this;
    out += other;
    return out;
}

Element Element::operator-(const Element& other) const {
    Element out = *this;
    out -= other;
    return out;
}

Element Element::operator-() const {
    Element out = *this;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        const auto n = group_.order(i);
        if (n == 0) {
            out.coeffs_[i] = detail::checked_mul(-1, out.coeffs_[i]);
        } else if (out.coeffs_[i] != 0) {
            out.coeffs_[i] = n - out.coeffs_[i];
        }
    }
    return out;
}

Element operator*(std::int64_t k, const Element& x) {
    Element out = x;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        const auto n = x.group_.order(i);
        if (n == 0) {
            out.coeffs_[i] = detail::checked_mul(k, x.coeffs_[i]);
        } else {
            const __int128 prod = static_cast<__int128>(detail::mod(k, n)) * x.coeffs_[i];
            out.coeffs_[i] = static_cast<std::int64_t>(prod % n);
        }
    }
    return out;
}

std::string Element::key() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coeffs_[i]);
    }
    return s;
}

bool operator==(const Element& a, const Element& b) { return a.coeffs_ == b.coeffs_ && a.group_ == b.group_; }

std::strong_ordering operator<=>(const Element& a, const Element& b) { return a.coeffs_ <=> b.coeffs_; }

Element reduce(const FgAbGroup& group, std::span<const std::int64_t> coeffs) {
    return Element(group, std::vector<std::int64_t>(coeffs.begin(), coeffs.end()));
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Element> enumerate(const FgAbGroup& group) {
    if (!group.is_finite()) throw InfiniteGroup("cannot enumerate " + group.to_string());
    std::vector<std::int64_t> lo(group.rank(), 0), hi(group.rank());
    for (std::size_t i = 0; i < group.rank(); ++i) hi[i] = group.order(i) - 1;
    return box(group, lo, hi);
}

std::vector<Element> sample_box(const FgAbGroup& group, std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("sample bound must be positive");
    std::vector<std::int64_t> lo(group.rank()), hi(group.rank());
    for (std::size_t i = 0; i < group.rank(); ++i) {
        const auto n = group.order(i);
        lo[i] = n == 0 ? -bound : 0;
        hi[i] = n == 0 ? bound : n - 1;
    }
    return box(group, lo, hi);
}

std::vector<Element> exhaust_or_sample(const FgAbGroup& group, std::int64_t bound) {
    return group.is_finite() ? enumerate(group) : sample_box(group, bound);
}

std::vector<Element> torsion_elements(const FgAbGroup& group, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("torsion exponent must be positive");
    // On Z/m the solutions of n*x = 0 are the multiples of m / gcd(n, m).
    std::vector<std::int64_t> step(group.rank()), count(group.rank());
    for (std::size_t i = 0; i < group.rank(); ++i) {
        const auto m = group.order(i);
        if (m == 0) {
            step[i] = 0;
            count[i] = 1;
        } else {
            const auto g = std::gcd(n, m);
            step[i] = m / g;
            count[i] = g;
        }
    }
    std::vector<std::int64_t> lo(group.rank(), 0), hi(group.rank());
    for (std::size_t i = 0; i < group.rank(); ++i) hi[i] = count[i] - 1;
    auto multiples = box(FgAbGroup::free(group.rank()), lo, hi);
    std::vector<Element> out;
    out.reserve(multiples.size());
    for (const auto& idx : multiples) {
        std::vector<std::int64_t> c(group.rank());
        for (std::size_t i = 0; i < group.rank(); ++i) c[i] = idx[i] * step[i];
        out.emplace_back(group, std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Homomorphism

Homomorphism::Homomorphism(FgAbGroup source, FgAbGroup target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.rank()) throw InvalidForm("homomorphism needs one image per source generator");
    for (std::size_t j = 0; j < images_.size(); ++j) {
        require_same(images_[j].group(), target_);
        if (const auto n = source_.order(j); n != 0 && !(n * images_[j]).is_zero()) {
            throw InvalidForm("image of generator " + std::to_string(j) + " is not killed by its order " +
                              std::to_string(n));
        }
    }
}

Element Homomorphism::operator()(const Element& x) const {
    require_same(x.group(), source_);
    Element out = target_.zero();
    for (std::size_t j = 0; j < images_.size(); ++j) out += x[j] * images_[j];
    return out;
}

// ---------------------------------------------------------------------------
// Mod2Basis

namespace {

std::vector<std::size_t> mod2_support(const FgAbGroup& g) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (g.order(i) % 2 == 0) s.push_back(i);  // includes order 0
    }
    return s;
}

// Gauss-Jordan over F_2; returns false if singular.
bool invert_f2(std::vector<std::vector<std::uint8_t>> a, std::vector<std::vector<std::uint8_t>>& inv) {
    const std::size_t d = a.size();
    inv.assign(d, std::vector<std::uint8_t>(d, 0));
    for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && a[pivot][col] == 0) ++pivot;
        if (pivot == d) return false;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        for (std::size_t row = 0; row < d; ++row) {
            if (row != col && a[row][col]) {
                for (std::size_t k = 0; k < d; ++k) {
                    a[row][k] ^= a[col][k];
                    inv[row][k] ^= inv[col][k];
                }
            }
        }
    }
    return true;
}

}  // namespace

Mod2Basis::Mod2Basis(FgAbGroup group) : group_(std::move(group)), support_(mod2_support(group_)) {
    const std::size_t d = support_.size();
    vectors_.assign(d, std::vector<std::uint8_t>(d, 0));
    for (std::size_t i = 0; i < d; ++i) vectors_[i][i] = 1;
    inverse_ = vectors_;
}

Mod2Basis::Mod2Basis(FgAbGroup group, std::vector<std::vector<std::uint8_t>> vectors)
    : group_(std::move(group)), support_(mod2_support(group_)), vectors_(std::move(vectors)), standard_(false) {
    const std::size_t d = support_.size();
    if (vectors_.size() != d) throw InvalidForm("G/2G has dimension " + std::to_string(d));
    // Column j of the change-of-basis matrix is vectors_[j].
    std::vector<std::vector<std::uint8_t>> m(d, std::vector<std::uint8_t>(d, 0));
    for (std::size_t j = 0; j < d; ++j) {
        if (vectors_[j].size() != d) throw InvalidForm("basis vector has wrong length");
        for (std::size_t i = 0; i < d; ++i) {
            if (vectors_[j][i] > 1) throw InvalidForm("basis vectors must have 0/1 entries");
            m[i][j] = vectors_[j][i];
        }
    }
    if (!invert_f2(m, inverse_)) throw InvalidForm("vectors are linearly dependent over F_2");
    standard_ = (m == inverse_) && [&] {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (m[i][j] != (i == j)) return false;
        return true;
    }();
}

std::vector<std::uint8_t> Mod2Basis::reduce(const Element& x) const {
    require_same(x.group(), group_);
    const std::size_t d = support_.size();
    std::vector<std::uint8_t> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = static_cast<std::uint8_t>(detail::mod(x[support_[i]], 2));
    if (standard_) return v;
    std::vector<std::uint8_t> out(d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) out[i] ^= static_cast<std::uint8_t>(inverse_[i][k] & v[k]);
    return out;
}

Element Mod2Basis::lift(std::size_t i) const {
    std::vector<std::int64_t> c(group_.rank(), 0);
    for (std::size_t k = 0; k < support_.size(); ++k) c[support_[k]] = vectors_.at(i)[k];
    return Element(group_, std::move(c));
}

bool operator==(const Mod2Basis& a, const Mod2Basis& b) { return a.group_ == b.group_ && a.vectors_ == b.vectors_; }

Mod2Basis mod2_basis(const FgAbGroup& group) { return Mod2Basis(group); }

}  // namespace bcg
