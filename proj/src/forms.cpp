#include "bcg/forms.hpp"

#include <numeric>
#include <string>

#include "bcg/error.hpp"

namespace bcg {

namespace {

void require_group(const FgAbGroup& actual, const FgAbGroup& expected, const char* what) {
    if (!(actual == expected)) {
        throw GroupMismatch(std::string(what) + ": expected " + expected.to_string() + ", got " + actual.to_string());
    }
}

// Pairwise sums of a finite group by element index.
std::vector<std::size_t> sum_table(const std::vector<Element>& elems) {
    const std::size_t n = elems.size();
    const FgAbGroup& g = elems.front().group();
    std::vector<std::size_t> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = g.index_of(elems[i] + elems[j]);
    return out;
}

std::uint64_t checked_product(std::uint64_t acc, std::uint64_t factor, std::uint64_t budget, const char* what) {
    if (factor != 0 && acc > budget / factor) {
        throw SearchSpaceTooLarge(std::string(what) + " exceeds the candidate budget of " + std::to_string(budget));
    }
    return acc * factor;
}

// Values an entry t_ij of a well-defined bilinear form may take:
// {m : n_i m = 0, n_j m = 0} = {m : gcd(n_i, n_j) m = 0}.
std::vector<std::vector<std::vector<Element>>> bilinear_domains(const FgAbGroup& source, const FgAbGroup& target) {
    const std::size_t r = source.rank();
    std::vector<std::vector<std::vector<Element>>> dom(r, std::vector<std::vector<Element>>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            const auto g = std::gcd(source.order(i), source.order(j));
            if (g == 0) {
                if (!target.is_finite()) {
                    throw SearchSpaceTooLarge("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                              ") ranges over the infinite group " + target.to_string());
                }
                dom[i][j] = enumerate(target);
            } else {
                dom[i][j] = torsion_elements(target, g);
            }
        }
    }
    return dom;
}

// Calls visit(matrix) for every matrix drawn from the domains, row-major with
// the last entry fastest. Stops early when visit returns true.
template <class Visit>
void for_each_matrix(const FgAbGroup& source, const FgAbGroup& target, std::uint64_t budget, Visit&& visit) {
    const std::size_t r = source.rank();
    const auto dom = bilinear_domains(source, target);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) total = checked_product(total, dom[i][j].size(), budget, "bilinear search");
    if (total > budget) throw SearchSpaceTooLarge("bilinear search exceeds the candidate budget");

    std::vector<std::size_t> pos(r * r, 0);
    std::vector<std::vector<Element>> m(r, std::vector<Element>(r, target.zero()));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) m[i][j] = dom[i][j][0];
    for (;;) {
        if (visit(m)) return;
        std::size_t k = r * r;
        for (;;) {
            if (k == 0) return;
            --k;
            const std::size_t i = k / r, j = k % r;
            if (++pos[k] < dom[i][j].size()) {
                m[i][j] = dom[i][j][pos[k]];
                break;
            }
            pos[k] = 0;
            m[i][j] = dom[i][j][0];
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// BilinearForm

BilinearForm::BilinearForm(FgAbGroup source, FgAbGroup target, std::vector<std::vector<Element>> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    const std::size_t r = source_.rank();
    if (matrix_.size() != r) throw InvalidForm("bilinear matrix must have " + std::to_string(r) + " rows");
    for (std::size_t i = 0; i < r; ++i) {
        if (matrix_[i].size() != r) throw InvalidForm("bilinear matrix must be square");
        for (std::size_t j = 0; j < r; ++j) {
            require_group(matrix_[i][j].group(), target_, "bilinear entry");
            for (const auto n : {source_.order(i), source_.order(j)}) {
                if (n != 0 && !(n * matrix_[i][j]).is_zero()) {
                    throw InvalidForm("bilinear entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") is not killed by generator order " + std::to_string(n));
                }
            }
        }
    }
}

BilinearForm BilinearForm::zero(const FgAbGroup& source, const FgAbGroup& target) {
    return BilinearForm(source, target,
                        std::vector<std::vector<Element>>(source.rank(), std::vector<Element>(source.rank(), target.zero())));
}

Element BilinearForm::operator()(const Element& x, const Element& y) const {
    require_group(x.group(), source_, "bilinear argument");
    require_group(y.group(), source_, "bilinear argument");
    Element out = target_.zero();
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < matrix_.size(); ++j) {
            if (y[j] == 0) continue;
            out += detail::checked_mul(x[i], y[j]) * matrix_[i][j];
        }
    }
    return out;
}

BilinearForm BilinearForm::transpose() const {
    auto m = matrix_;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = matrix_[j][i];
    return BilinearForm(source_, target_, std::move(m));
}

BilinearForm BilinearForm::operator+(const BilinearForm& other) const {
    require_group(other.source_, source_, "bilinear sum");
    require_group(other.target_, target_, "bilinear sum");
    auto m = matrix_;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) m[i][j] += other.matrix_[i][j];
    return BilinearForm(source_, target_, std::move(m));
}

bool BilinearForm::is_zero() const {
    for (const auto& row : matrix_)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

bool BilinearForm::is_symmetric() const { return *this == transpose(); }

bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
}

// ---------------------------------------------------------------------------
// QuadraticForm

QuadraticForm::QuadraticForm(FgAbGroup source, FgAbGroup target, std::vector<Element> diag, const CrossTerms& cross)
    : source_(std::move(source)), target_(std::move(target)), diag_(std::move(diag)) {
    const std::size_t r = source_.rank();
    if (diag_.size() != r) throw InvalidForm("quadratic form needs one diagonal value per generator");
    for (const auto& d : diag_) require_group(d.group(), target_, "quadratic diagonal");
    cross_.assign(r, std::vector<Element>(r, target_.zero()));
    for (const auto& [ij, value] : cross) {
        const auto [i, j] = ij;
        if (i >= j || j >= r) {
            throw InvalidForm("cross term (" + std::to_string(i) + "," + std::to_string(j) + ") needs i < j < rank");
        }
        require_group(value.group(), target_, "quadratic cross term");
        cross_[i][j] = value;
        cross_[j][i] = value;
    }
    for (std::size_t i = 0; i < r; ++i) {
        const auto n = source_.order(i);
        if (n == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (j != i && !(n * cross_[i][j]).is_zero()) {
                throw InvalidForm("b(g_" + std::to_string(i) + ", g_" + std::to_string(j) + ") is not killed by " +
                                  std::to_string(n));
            }
        }
        if (!(detail::checked_mul(2, n) * diag_[i]).is_zero() || !(detail::checked_mul(n, n) * diag_[i]).is_zero()) {
            throw InvalidForm("q(g_" + std::to_string(i) + ") violates 2n q = 0 or n^2 q = 0 for n = " +
                              std::to_string(n));
        }
    }
}

QuadraticForm QuadraticForm::zero(const FgAbGroup& source, const FgAbGroup& target) {
    return QuadraticForm(source, target, std::vector<Element>(source.rank(), target.zero()));
}

QuadraticForm QuadraticForm::from_table(const FgAbGroup& source, const FgAbGroup& target, std::span<const Element> table) {
    if (!validate_quadratic_table(source, target, table)) throw InvalidForm("table is not a quadratic form");
    const std::size_t r = source.rank();
    std::vector<Element> diag;
    for (std::size_t i = 0; i < r; ++i) diag.push_back(table[source.index_of(source.generator(i))]);
    CrossTerms cross;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            const auto sum = source.generator(i) + source.generator(j);
            cross.emplace(std::pair{i, j}, table[source.index_of(sum)] - diag[i] - diag[j]);
        }
    }
    QuadraticForm q(source, target, std::move(diag), cross);
    const auto elems = enumerate(source);
    for (std::size_t k = 0; k < elems.size(); ++k) {
        if (!(q(elems[k]) == table[k])) throw InvalidForm("table disagrees with its generator data at " + elems[k].key());
    }
    return q;
}

Element QuadraticForm::cross(std::size_t i, std::size_t j) const {
    if (i == j) return 2 * diag_[i];
    return cross_[i][j];
}

Element QuadraticForm::operator()(const Element& x) const {
    require_group(x.group(), source_, "quadratic argument");
    Element out = target_.zero();
    const std::size_t r = diag_.size();
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i] == 0) continue;
        out += detail::checked_mul(x[i], x[i]) * diag_[i];
        for (std::size_t j = i + 1; j < r; ++j) {
            if (x[j] != 0) out += detail::checked_mul(x[i], x[j]) * cross_[i][j];
        }
    }
    return out;
}

std::vector<Element> QuadraticForm::table() const {
    std::vector<Element> out;
    for (const auto& x : enumerate(source_)) out.push_back((*this)(x));
    return out;
}

bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.diag_ == b.diag_ && a.cross_ == b.cross_;
}

// ---------------------------------------------------------------------------

Element Mod2Homomorphism::operator()(const Element& x) const {
    const auto coords = basis.reduce(x);
    Element out = target.zero();
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (coords[k]) out += values[k];
    return out;
}

bool validate_quadratic_table(const FgAbGroup& source, const FgAbGroup& target, std::span<const Element> table) {
    const auto elems = enumerate(source);
    const std::size_t n = elems.size();
    if (table.size() != n) throw InvalidForm("table must have one value per group element");
    for (const auto& v : table) require_group(v.group(), target, "table value");
    const auto sum = sum_table(elems);
    for (std::size_t x = 0; x < n; ++x) {
        if (!(table[source.index_of(-elems[x])] == table[x])) return false;
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t xy = sum[x * n + y];
            for (std::size_t z = 0; z < n; ++z) {
                const std::size_t yz = sum[y * n + z], zx = sum[z * n + x], xyz = sum[xy * n + z];
                if (!(table[xyz] + table[x] + table[y] + table[z] == table[yz] + table[zx] + table[xy])) return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<Element>> enumerate_quadratic_tables(const FgAbGroup& source, const FgAbGroup& target,
                                                             std::uint64_t max_candidates) {
    const auto g = enumerate(source);
    const auto m = enumerate(target);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < g.size(); ++k) total = checked_product(total, m.size(), max_candidates, "table search");
    if (total > max_candidates) throw SearchSpaceTooLarge("table search exceeds the candidate budget");

    std::vector<std::vector<Element>> out;
    std::vector<std::size_t> pos(g.size(), 0);
    std::vector<Element> table(g.size(), m[0]);
    for (;;) {
        if (validate_quadratic_table(source, target, table)) out.push_back(table);
        std::size_t k = g.size();
        for (;;) {
            if (k == 0) return out;
            --k;
            if (++pos[k] < m.size()) {
                table[k] = m[pos[k]];
                break;
            }
            pos[k] = 0;
            table[k] = m[0];
        }
    }
}

BilinearForm polarization(const QuadraticForm& q) {
    const std::size_t r = q.source().rank();
    std::vector<std::vector<Element>> m(r, std::vector<Element>(r, q.target().zero()));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) m[i][j] = q.cross(i, j);
    return BilinearForm(q.source(), q.target(), std::move(m));
}

std::optional<BilinearForm> is_polar(const QuadraticForm& q) {
    const auto& G = q.source();
    const auto& M = q.target();
    const std::size_t r = G.rank();
    std::vector<std::vector<Element>> t(r, std::vector<Element>(r, M.zero()));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) t[i][j] = q.cross(i, j);
        const auto n = G.order(i);
        if (n == 0) {
            t[i][i] = q.diag(i);
            continue;
        }
        const Element target2 = 2 * q.diag(i);
        bool found = false;
        for (const auto& m : torsion_elements(M, n)) {
            if (2 * m == target2) {
                t[i][i] = m;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return BilinearForm(G, M, std::move(t));
}

std::optional<BilinearForm> brute_force_polar_witness(const QuadraticForm& q, std::uint64_t max_candidates) {
    const auto b = polarization(q);
    const std::size_t r = q.source().rank();
    std::optional<BilinearForm> found;
    for_each_matrix(q.source(), q.target(), max_candidates, [&](const std::vector<std::vector<Element>>& t) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (!(t[i][j] + t[j][i] == b.entry(i, j))) return false;
        found.emplace(q.source(), q.target(), t);
        return true;
    });
    return found;
}

bool brute_force_is_polar(const QuadraticForm& q, std::uint64_t max_candidates) {
    return brute_force_polar_witness(q, max_candidates).has_value();
}

Mod2Homomorphism decompose_polar(const QuadraticForm& q, const BilinearForm& t) {
    return decompose_polar(q, t, mod2_basis(q.source()));
}

Mod2Homomorphism decompose_polar(const QuadraticForm& q, const BilinearForm& t, const Mod2Basis& basis) {
    require_group(t.source(), q.source(), "witness source");
    require_group(t.target(), q.target(), "witness target");
    require_group(basis.group(), q.source(), "mod-2 basis");
    if (!(t + t.transpose() == polarization(q))) throw NotAWitness("t + t^T differs from the polarization of q");
    Mod2Homomorphism out{basis, q.target(), {}};
    for (std::size_t k = 0; k < basis.dimension(); ++k) {
        const auto beta = basis.lift(k);
        auto value = q(beta) - t(beta, beta);
        if (!(2 * value).is_zero()) throw NotAWitness("q - t(x,x) is not 2-torsion");
        out.values.push_back(std::move(value));
    }
    return out;
}

std::vector<BilinearForm> enumerate_bilinear_forms(const FgAbGroup& source, const FgAbGroup& target,
                                                   std::uint64_t max_candidates) {
    std::vector<BilinearForm> out;
    for_each_matrix(source, target, max_candidates, [&](const std::vector<std::vector<Element>>& t) {
        out.emplace_back(source, target, t);
        return false;
    });
    return out;
}

std::vector<Mod2Homomorphism> enumerate_mod2_homomorphisms(const FgAbGroup& source, const FgAbGroup& target,
                                                           std::uint64_t max_candidates) {
    const Mod2Basis basis(source);
    const auto values = torsion_elements(target, 2);
    const std::size_t d = basis.dimension();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < d; ++k) total = checked_product(total, values.size(), max_candidates, "Hom(G/2G, 2M)");
    if (total > max_candidates) throw SearchSpaceTooLarge("Hom(G/2G, 2M) exceeds the candidate budget");

    std::vector<Mod2Homomorphism> out;
    std::vector<std::size_t> pos(d, 0);
    for (;;) {
        Mod2Homomorphism f{basis, target, {}};
        for (std::size_t k = 0; k < d; ++k) f.values.push_back(values[pos[k]]);
        out.push_back(std::move(f));
        std::size_t k = d;
        for (;;) {
            if (k == 0) return out;
            --k;
            if (++pos[k] < values.size()) break;
            pos[k] = 0;
        }
    }
}

namespace whitehead {

QuadraticForm psi(const Mod2Homomorphism& f) {
    for (const auto& v : f.values) {
        if (!(2 * v).is_zero()) throw InvalidForm("psi needs 2-torsion values, got " + v.key());
    }
    const auto& G = f.basis.group();
    std::vector<Element> diag;
    for (std::size_t i = 0; i < G.rank(); ++i) diag.push_back(f(G.generator(i)));
    return QuadraticForm(G, f.target, std::move(diag));
}

BilinearForm phi(const QuadraticForm& q) { return polarization(q); }

QuadraticForm diag(const BilinearForm& form) {
    const std::size_t r = form.source().rank();
    std::vector<Element> d;
    QuadraticForm::CrossTerms cross;
    for (std::size_t i = 0; i < r; ++i) {
        d.push_back(form.entry(i, i));
        for (std::size_t j = i + 1; j < r; ++j) cross.emplace(std::pair{i, j}, form.entry(i, j) + form.entry(j, i));
    }
    return QuadraticForm(form.source(), form.target(), std::move(d), cross);
}

BilinearForm sym(const BilinearForm& form) { return form + form.transpose(); }

std::optional<Mod2Homomorphism> psi_preimage(const QuadraticForm& q) {
    if (!phi(q).is_zero()) return std::nullopt;
    Mod2Homomorphism f{Mod2Basis(q.source()), q.target(), {}};
    for (std::size_t k = 0; k < f.basis.dimension(); ++k) f.values.push_back(q(f.basis.lift(k)));
    return f;
}

}  // namespace whitehead

}  // namespace bcg
