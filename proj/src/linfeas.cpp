#include "pert/linfeas.hpp"

#include "pert/error.hpp"

#include <sstream>
#include <stdexcept>

namespace pert {

namespace {

void check_rows(int n, const std::vector<RowVector>& rows) {
    for (const auto& r : rows)
        if (r.size() != static_cast<std::size_t>(n))
            throw Error(ErrorKind::Dimension, "DimensionMismatch",
                        "constraint of length " + std::to_string(r.size()) + " in a system of dimension " +
                            std::to_string(n));
}

Rational dot(const RowVector& a, std::span<const Rational> t) {
    Rational s = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (sgn(a[j]) != 0) s += a[j] * t[j];
    return s;
}

// Index of the single nonzero entry, -1 when none, -2 when several.
int single_support(const RowVector& a) {
    int found = -1;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (sgn(a[j]) == 0) continue;
        if (found != -1) return -2;
        found = static_cast<int>(j);
    }
    return found;
}

enum class RowKind { Equal, AtLeast };

struct Row {
    const RowVector* coeffs;
    RowKind kind;
    Rational bound;  // <a,t> = bound or <a,t> >= bound
};

// Phase-1 simplex on a dense tableau, Bland's rule for entering and leaving
// variables. Columns: structural variables, then surplus, then artificials.
class Phase1 {
public:
    Phase1(std::size_t rows, std::size_t cols) : t_(rows, RowVector(cols + 1)), basis_(rows, 0), cols_(cols) {}

    Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
    Rational& rhs(std::size_t i) { return t_[i][cols_]; }
    void set_basic(std::size_t i, std::size_t col) { basis_[i] = col; }

    // Minimises the sum of the columns flagged in `cost`; returns the optimum.
    Rational solve(const std::vector<char>& cost) {
        const std::size_t m = t_.size();
        reduced_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < cols_; ++j)
            if (cost[j]) reduced_[j] = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (!cost[basis_[i]]) continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(t_[i][j]) != 0) reduced_[j] -= t_[i][j];
        }
        // reduced_[cols_] holds -objective.
        while (true) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (sgn(reduced_[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols_) break;
            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (sgn(t_[i][enter]) <= 0) continue;
                Rational ratio = t_[i][cols_] / t_[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) throw std::logic_error("phase-1 simplex unbounded");
            pivot(leave, enter);
        }
        return -reduced_[cols_];
    }

    Rational value(std::size_t col) const {
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (basis_[i] == col) return t_[i][cols_];
        return 0;
    }

private:
    void pivot(std::size_t r, std::size_t e) {
        auto& prow = t_[r];
        const Rational inv = 1 / prow[e];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j <= cols_; ++j) {
            if (sgn(prow[j]) == 0) continue;
            prow[j] *= inv;
            nz.push_back(j);
        }
        auto eliminate = [&](RowVector& row) {
            if (sgn(row[e]) == 0) return;
            const Rational f = row[e];
            for (std::size_t j : nz) row[j] -= f * prow[j];
        };
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (i != r) eliminate(t_[i]);
        eliminate(reduced_);
        basis_[r] = e;
    }

    std::vector<RowVector> t_;
    std::vector<std::size_t> basis_;
    RowVector reduced_;
    std::size_t cols_;
};

} // namespace

bool satisfies(const ConstraintSystem& system, std::span<const Rational> t) {
    if (t.size() != static_cast<std::size_t>(system.n)) return false;
    for (const auto& a : system.equalities)
        if (sgn(dot(a, t)) != 0) return false;
    for (const auto& a : system.weak)
        if (sgn(dot(a, t)) < 0) return false;
    for (const auto& a : system.strict)
        if (sgn(dot(a, t)) <= 0) return false;
    return true;
}

std::optional<std::vector<Rational>> feasible(const ConstraintSystem& system) {
    const int n = system.n;
    if (n < 0) throw Error(ErrorKind::Dimension, "DimensionMismatch", "negative dimension");
    check_rows(n, system.equalities);
    check_rows(n, system.weak);
    check_rows(n, system.strict);
    const auto un = static_cast<std::size_t>(n);

    // Presolve: positive single-variable rows become lower bounds.
    std::vector<std::optional<Rational>> lower(un);
    std::vector<Row> rows;
    auto add_bound = [&](std::size_t j, const Rational& b) {
        if (!lower[j] || b > *lower[j]) lower[j] = b;
    };
    for (const auto& a : system.equalities)
        if (single_support(a) != -1) rows.push_back({&a, RowKind::Equal, 0});
    for (const auto& a : system.weak) {
        int s = single_support(a);
        if (s >= 0 && sgn(a[static_cast<std::size_t>(s)]) > 0)
            add_bound(static_cast<std::size_t>(s), 0);
        else if (s != -1)
            rows.push_back({&a, RowKind::AtLeast, 0});
    }
    for (const auto& a : system.strict) {
        int s = single_support(a);
        if (s == -1) return std::nullopt;  // 0 > 0
        if (s >= 0 && sgn(a[static_cast<std::size_t>(s)]) > 0)
            add_bound(static_cast<std::size_t>(s), 1 / a[static_cast<std::size_t>(s)]);
        else
            rows.push_back({&a, RowKind::AtLeast, 1});
    }

    // Structural columns: u_j >= 0 with t_j = lower_j + u_j for bounded
    // variables, t_j = p_j - q_j (two columns) for free ones.
    std::vector<std::size_t> col_of(un);
    std::size_t cols = 0;
    for (std::size_t j = 0; j < un; ++j) {
        col_of[j] = cols;
        cols += lower[j] ? 1 : 2;
    }
    const std::size_t structural = cols;
    std::size_t surplus = 0;
    for (const auto& r : rows) surplus += r.kind == RowKind::AtLeast ? 1 : 0;

    // Decide per row whether its surplus column can start basic.
    const std::size_t m = rows.size();
    std::vector<Rational> rhs(m);
    std::vector<int> flip(m, 1);
    std::size_t artificials = 0;
    std::vector<char> needs_artificial(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        Rational b = rows[i].bound;
        const auto& a = *rows[i].coeffs;
        for (std::size_t j = 0; j < un; ++j)
            if (lower[j] && sgn(a[j]) != 0) b -= a[j] * *lower[j];
        if (sgn(b) < 0) {
            flip[i] = -1;
            b = -b;
        }
        rhs[i] = b;
        // A flipped AtLeast row has surplus coefficient +1.
        if (rows[i].kind == RowKind::AtLeast && (flip[i] == -1 || sgn(b) == 0)) {
            if (flip[i] == 1) flip[i] = -1;  // b == 0: flip so the surplus enters with +1
            needs_artificial[i] = 0;
        }
        artificials += needs_artificial[i];
    }

    const std::size_t total = structural + surplus + artificials;
    Phase1 lp(m, total);
    std::vector<char> cost(total, 0);
    std::size_t next_surplus = structural;
    std::size_t next_art = structural + surplus;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& a = *rows[i].coeffs;
        const int f = flip[i];
        for (std::size_t j = 0; j < un; ++j) {
            if (sgn(a[j]) == 0) continue;
            lp.at(i, col_of[j]) = f * a[j];
            if (!lower[j]) lp.at(i, col_of[j] + 1) = -f * a[j];
        }
        lp.rhs(i) = rhs[i];
        if (rows[i].kind == RowKind::AtLeast) {
            lp.at(i, next_surplus) = -f;
            if (!needs_artificial[i]) lp.set_basic(i, next_surplus);
            ++next_surplus;
        }
        if (needs_artificial[i]) {
            lp.at(i, next_art) = 1;
            lp.set_basic(i, next_art);
            cost[next_art] = 1;
            ++next_art;
        }
    }

    if (sgn(lp.solve(cost)) > 0) return std::nullopt;

    std::vector<Rational> point(un);
    for (std::size_t j = 0; j < un; ++j) {
        if (lower[j])
            point[j] = *lower[j] + lp.value(col_of[j]);
        else
            point[j] = lp.value(col_of[j]) - lp.value(col_of[j] + 1);
    }
    point = normalize_integral(std::move(point));
    if (!satisfies(system, point)) throw std::logic_error("feasibility witness failed substitution check");
    return point;
}

int rank(std::vector<RowVector> rows, int n) {
    check_rows(n, rows);
    int r = 0;
    for (int col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
        const auto c = static_cast<std::size_t>(col);
        auto pivot = static_cast<std::size_t>(r);
        while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[static_cast<std::size_t>(r)]);
        const auto& prow = rows[static_cast<std::size_t>(r)];
        for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][c]) == 0) continue;
            Rational f = rows[i][c] / prow[c];
            for (std::size_t j = c; j < static_cast<std::size_t>(n); ++j) rows[i][j] -= f * prow[j];
        }
        ++r;
    }
    return r;
}

int cone_dimension(int n, const std::vector<RowVector>& equalities, const std::vector<RowVector>& weak) {
    check_rows(n, equalities);
    check_rows(n, weak);
    std::vector<RowVector> implicit = equalities;
    for (std::size_t k = 0; k < weak.size(); ++k) {
        ConstraintSystem probe{n, equalities, {}, {weak[k]}};
        for (std::size_t l = 0; l < weak.size(); ++l)
            if (l != k) probe.weak.push_back(weak[l]);
        if (!feasible(probe)) implicit.push_back(weak[k]);
    }
    return n - rank(std::move(implicit), n);
}

std::string dump_system(const ConstraintSystem& system) {
    std::ostringstream os;
    auto line = [&](const RowVector& a, const char* rel) {
        os << "<(";
        for (std::size_t j = 0; j < a.size(); ++j) os << (j ? "," : "") << format_rational(a[j]);
        os << "),t> " << rel << " 0\n";
    };
    for (const auto& a : system.equalities) line(a, "=");
    for (const auto& a : system.weak) line(a, ">=");
    for (const auto& a : system.strict) line(a, ">");
    return os.str();
}

} // namespace pert
