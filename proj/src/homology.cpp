#include "simpset/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "simpset/core.hpp"
#include "simpset/errors.hpp"

namespace simpset {

namespace {

struct Overflow {};

std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Overflow{};
    return r;
}
std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow{};
    return r;
}
std::int64_t neg(std::int64_t a)
{
    return mul(a, -1);
}
std::int64_t quot(std::int64_t a, std::int64_t b)
{
    if (b == -1)
        return neg(a);
    return a / b;
}
Integer add(const Integer& a, const Integer& b)
{
    return a + b;
}
Integer mul(const Integer& a, const Integer& b)
{
    return a * b;
}
Integer neg(const Integer& a)
{
    return -a;
}
Integer quot(const Integer& a, const Integer& b)
{
    return a / b;  // truncates toward zero like the machine version
}
template <class T>
T absval(const T& a)
{
    return a < 0 ? neg(a) : a;
}

// In-place Smith reduction; u and v (optional) accumulate the row and
// column operations.
template <class T>
void reduce(DenseMatrix<T>& a, DenseMatrix<T>* u, DenseMatrix<T>* v)
{
    const std::size_t rows = a.rows, cols = a.cols;
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < cols; ++k)
            std::swap(a(i, k), a(j, k));
        if (u)
            for (std::size_t k = 0; k < u->cols; ++k)
                std::swap((*u)(i, k), (*u)(j, k));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < rows; ++k)
            std::swap(a(k, i), a(k, j));
        if (v)
            for (std::size_t k = 0; k < v->rows; ++k)
                std::swap((*v)(k, i), (*v)(k, j));
    };
    // row dst += q * row src
    auto add_row = [&](std::size_t dst, std::size_t src, const T& q) {
        for (std::size_t k = 0; k < cols; ++k)
            if (a(src, k) != 0)
                a(dst, k) = add(a(dst, k), mul(q, a(src, k)));
        if (u)
            for (std::size_t k = 0; k < u->cols; ++k)
                if ((*u)(src, k) != 0)
                    (*u)(dst, k) = add((*u)(dst, k), mul(q, (*u)(src, k)));
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const T& q) {
        for (std::size_t k = 0; k < rows; ++k)
            if (a(k, src) != 0)
                a(k, dst) = add(a(k, dst), mul(q, a(k, src)));
        if (v)
            for (std::size_t k = 0; k < v->rows; ++k)
                if ((*v)(k, src) != 0)
                    (*v)(k, dst) = add((*v)(k, dst), mul(q, (*v)(k, src)));
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        bool found = false;
        std::size_t pi = t, pj = t;
        T best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a(i, j) != 0 && (!found || absval(a(i, j)) < best)) {
                    found = true;
                    best = absval(a(i, j));
                    pi = i;
                    pj = j;
                }
        if (!found)
            break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (a(i, t) != 0) {
                    add_row(i, t, neg(quot(a(i, t), a(t, t))));
                    dirty = dirty || a(i, t) != 0;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a(t, j) != 0) {
                    add_col(j, t, neg(quot(a(t, j), a(t, t))));
                    dirty = dirty || a(t, j) != 0;
                }
            if (dirty) {
                // a smaller remainder appeared in row or column t: move it to the pivot
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (a(i, t) != 0 && absval(a(i, t)) < absval(a(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(t, j) != 0 && absval(a(t, j)) < absval(a(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            bool divides = true;
            const bool unit = a(t, t) == 1 || a(t, t) == -1;
            for (std::size_t i = t + 1; i < rows && divides && !unit; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        add_row(t, i, T(1));
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (a(t, t) < 0) {
            for (std::size_t k = 0; k < cols; ++k)
                a(t, k) = neg(a(t, k));
            if (u)
                for (std::size_t k = 0; k < u->cols; ++k)
                    (*u)(t, k) = neg((*u)(t, k));
        }
    }
}

template <class T>
DenseMatrix<T> convert(const IntMatrix& m)
{
    DenseMatrix<T> out(m.rows, m.cols);
    for (std::size_t k = 0; k < m.entries.size(); ++k)
        out.entries[k] = T(m.entries[k]);
    return out;
}

template <class T>
SmithForm smith_with(const IntMatrix& m)
{
    auto a = convert<T>(m);
    auto u = DenseMatrix<T>::identity(m.rows);
    auto v = DenseMatrix<T>::identity(m.cols);
    reduce(a, &u, &v);
    SmithForm s;
    for (std::size_t t = 0; t < std::min(a.rows, a.cols) && a(t, t) != 0; ++t)
        s.invariants.push_back(Integer(a(t, t)));
    s.left = BigMatrix(u.rows, u.cols);
    for (std::size_t k = 0; k < u.entries.size(); ++k)
        s.left.entries[k] = Integer(u.entries[k]);
    s.right = BigMatrix(v.rows, v.cols);
    for (std::size_t k = 0; k < v.entries.size(); ++k)
        s.right.entries[k] = Integer(v.entries[k]);
    return s;
}

template <class T>
std::vector<Integer> invariants_with(const SparseMatrix& m)
{
    std::vector<std::map<std::size_t, T>> row(m.rows);
    std::vector<std::set<std::size_t>> col(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j)
        for (const auto& [i, value] : m.columns[j])
            if (value != 0) {
                row[i][j] = T(value);
                col[j].insert(i);
            }
    std::size_t units = 0;
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (col[c].empty())
                continue;
            std::size_t r = m.rows;
            for (std::size_t i : col[c])
                if (absval(row[i].at(c)) == 1 && (r == m.rows || row[i].size() < row[r].size()))
                    r = i;
            if (r == m.rows)
                continue;
            const T p = row[r].at(c);
            const std::vector<std::size_t> others(col[c].begin(), col[c].end());
            for (std::size_t r2 : others) {
                if (r2 == r)
                    continue;
                const T f = mul(row[r2].at(c), p);
                for (const auto& [c2, value] : row[r]) {
                    T nv = add(row[r2].count(c2) ? row[r2][c2] : T(0), neg(mul(f, value)));
                    if (nv == 0) {
                        row[r2].erase(c2);
                        col[c2].erase(r2);
                    } else {
                        row[r2][c2] = nv;
                        col[c2].insert(r2);
                    }
                }
            }
            for (const auto& [c2, value] : row[r])
                col[c2].erase(r);
            row[r].clear();
            ++units;
            progress = true;
        }
    }
    std::vector<std::size_t> live_rows, live_cols;
    std::vector<std::size_t> row_at(m.rows, 0), col_at(m.cols, 0);
    for (std::size_t i = 0; i < m.rows; ++i)
        if (!row[i].empty()) {
            row_at[i] = live_rows.size();
            live_rows.push_back(i);
        }
    for (std::size_t j = 0; j < m.cols; ++j)
        if (!col[j].empty()) {
            col_at[j] = live_cols.size();
            live_cols.push_back(j);
        }
    DenseMatrix<T> rest(live_rows.size(), live_cols.size());
    for (std::size_t i : live_rows)
        for (const auto& [j, value] : row[i])
            rest(row_at[i], col_at[j]) = value;
    reduce<T>(rest, nullptr, nullptr);
    std::vector<Integer> out(units, Integer(1));
    for (std::size_t t = 0; t < std::min(rest.rows, rest.cols) && rest(t, t) != 0; ++t)
        out.push_back(Integer(rest(t, t)));
    return out;
}

Integer determinant(BigMatrix a)
{
    // Bareiss fraction-free elimination
    const std::size_t n = a.rows;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return n == 0 ? Integer(1) : sign * a(n - 1, n - 1);
}

}  // namespace

BigMatrix to_big(const IntMatrix& m)
{
    return convert<Integer>(m);
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b)
{
    if (a.cols != b.rows)
        throw DimensionMismatch("multiply: inner dimensions differ");
    BigMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k)
            if (a(i, k) != 0)
                for (std::size_t j = 0; j < b.cols; ++j)
                    c(i, j) += a(i, k) * b(k, j);
    return c;
}

IntMatrix SparseMatrix::dense() const
{
    IntMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [i, value] : columns[j])
            m(i, j) = value;
    return m;
}

IntegerChainComplex chain_complex(const FiniteSimplicialSet& x)
{
    IntegerChainComplex c;
    const int top = x.max_dim();
    std::vector<std::size_t> pos(x.size());
    for (int d = 0; d <= top; ++d) {
        c.generators.push_back(x.generators_of_dim(d));
        for (std::size_t k = 0; k < c.generators.back().size(); ++k)
            pos[c.generators.back()[k]] = k;
    }
    for (int d = 0; d <= top; ++d) {
        const auto& gens = c.generators[static_cast<std::size_t>(d)];
        SparseMatrix m;
        m.rows = d == 0 ? 0 : c.generators[static_cast<std::size_t>(d - 1)].size();
        m.cols = gens.size();
        m.columns.resize(gens.size());
        for (std::size_t k = 0; d > 0 && k < gens.size(); ++k) {
            std::map<std::size_t, std::int64_t> acc;
            for (int i = 0; i <= d; ++i) {
                const auto& f = x.face(gens[k], i);
                if (f.is_nondegenerate())
                    acc[pos[f.generator]] += (i % 2 == 0) ? 1 : -1;
            }
            for (const auto& [r, value] : acc)
                if (value != 0)
                    m.columns[k].emplace_back(r, value);
        }
        c.boundary.push_back(std::move(m));
    }
    return c;
}

bool boundary_squared_zero(const IntegerChainComplex& c)
{
    for (std::size_t n = 1; n + 1 < c.boundary.size(); ++n) {
        const auto& lo = c.boundary[n];
        const auto& hi = c.boundary[n + 1];
        for (const auto& column : hi.columns) {
            std::map<std::size_t, Integer> acc;
            for (const auto& [mid, v] : column)
                for (const auto& [r, w] : lo.columns[mid])
                    acc[r] += Integer(v) * w;
            for (const auto& [r, value] : acc)
                if (value != 0)
                    return false;
        }
    }
    return true;
}

SmithForm smith_normal_form(const IntMatrix& m)
{
    try {
        return smith_with<std::int64_t>(m);
    } catch (const Overflow&) {
        return smith_with<Integer>(m);
    }
}

bool verify_smith(const IntMatrix& m, const SmithForm& s)
{
    if (s.left.rows != m.rows || s.right.cols != m.cols)
        return false;
    const auto d = multiply(multiply(s.left, to_big(m)), s.right);
    for (std::size_t i = 0; i < d.rows; ++i)
        for (std::size_t j = 0; j < d.cols; ++j) {
            const Integer expect = (i == j && i < s.invariants.size()) ? s.invariants[i] : Integer(0);
            if (d(i, j) != expect)
                return false;
        }
    for (std::size_t k = 0; k < s.invariants.size(); ++k)
        if (s.invariants[k] <= 0 || (k > 0 && s.invariants[k] % s.invariants[k - 1] != 0))
            return false;
    return abs(determinant(s.left)) == 1 && abs(determinant(s.right)) == 1;
}

std::vector<Integer> smith_invariants(const SparseMatrix& m)
{
    try {
        return invariants_with<std::int64_t>(m);
    } catch (const Overflow&) {
        return invariants_with<Integer>(m);
    }
}

std::string HomologyProfile::to_text() const
{
    std::ostringstream os;
    for (std::size_t n = 0; n < groups.size(); ++n) {
        os << "H" << n << ": ";
        const auto& g = groups[n];
        bool first = true;
        if (g.betti > 0) {
            os << "Z^" << g.betti;
            first = false;
        }
        for (const auto& t : g.torsion) {
            os << (first ? "" : " + ") << "Z/" << t;
            first = false;
        }
        if (first)
            os << "0";
        os << "\n";
    }
    return os.str();
}

std::string HomologyProfile::to_rows() const
{
    std::ostringstream os;
    for (std::size_t n = 0; n < groups.size(); ++n) {
        os << n << " " << groups[n].betti << " ";
        if (groups[n].torsion.empty())
            os << "-";
        for (std::size_t k = 0; k < groups[n].torsion.size(); ++k)
            os << (k ? "," : "") << groups[n].torsion[k];
        os << "\n";
    }
    return os.str();
}

HomologyProfile homology(const IntegerChainComplex& c, int max_dim)
{
    if (max_dim < 0)
        throw InvalidArgument("homology: negative max_dim");
    const auto top = static_cast<std::size_t>(max_dim);
    std::vector<std::vector<Integer>> inv(top + 2);
    for (std::size_t n = 1; n <= top + 1 && n < c.boundary.size(); ++n)
        inv[n] = smith_invariants(c.boundary[n]);
    HomologyProfile p;
    for (std::size_t n = 0; n <= top; ++n) {
        HomologyGroup g;
        const std::size_t cn = n < c.boundary.size() ? c.boundary[n].cols : 0;
        g.betti = cn - inv[n].size() - inv[n + 1].size();
        for (const auto& d : inv[n + 1])
            if (d > 1)
                g.torsion.push_back(d);
        p.groups.push_back(std::move(g));
    }
    return p;
}

HomologyProfile homology(const FiniteSimplicialSet& x, int max_dim)
{
    return homology(chain_complex(x), max_dim);
}

std::int64_t euler_characteristic(const FiniteSimplicialSet& x)
{
    std::int64_t chi = 0;
    for (GenId g = 0; g < x.size(); ++g)
        chi += x.dim(g) % 2 == 0 ? 1 : -1;
    return chi;
}

bool is_homology_equivalence(const SimplicialMap& f, int max_dim)
{
    if (max_dim < 0)
        throw InvalidArgument("is_homology_equivalence: negative max_dim");
    if (const auto r = f.check(); !r.ok())
        throw InvalidArgument("is_homology_equivalence: invalid map: " + r.to_string());
    const auto& x = *f.source();
    const auto& y = *f.target();

    const auto px = path_components(x);
    const auto py = path_components(y);
    if (px.blocks.size() != py.blocks.size())
        return false;
    std::set<int> hit;
    for (const auto& block : px.blocks)
        hit.insert(py.block_of[f.vertex_image(block.front())]);
    if (hit.size() != py.blocks.size())
        return false;

    const auto cx = chain_complex(x);
    const auto cy = chain_complex(y);
    const auto n_top = static_cast<std::size_t>(max_dim);
    if (homology(cx, max_dim).groups[n_top] != homology(cy, max_dim).groups[n_top])
        return false;

    auto size_of = [](const IntegerChainComplex& c, long n) -> std::size_t {
        return n < 0 || static_cast<std::size_t>(n) >= c.generators.size() ? 0 : c.generators[static_cast<std::size_t>(n)].size();
    };
    std::vector<std::size_t> pos_y(y.size());
    for (const auto& gens : cy.generators)
        for (std::size_t k = 0; k < gens.size(); ++k)
            pos_y[gens[k]] = k;
    auto column = [](const IntegerChainComplex& c, long n, std::size_t k) {
        static const std::vector<std::pair<std::size_t, std::int64_t>> none;
        if (n <= 0 || static_cast<std::size_t>(n) >= c.boundary.size())
            return none;
        return c.boundary[static_cast<std::size_t>(n)].columns[k];
    };

    // cone_k = Y_k + X_{k-1}, d(y, x) = (dy + f x, -dx)
    IntegerChainComplex cone;
    for (long k = 0; k <= static_cast<long>(n_top) + 1; ++k) {
        SparseMatrix m;
        const std::size_t yk = size_of(cy, k), xk1 = size_of(cx, k - 1);
        const std::size_t yk1 = size_of(cy, k - 1);
        m.cols = yk + xk1;
        m.rows = k == 0 ? 0 : yk1 + size_of(cx, k - 2);
        m.columns.resize(m.cols);
        for (std::size_t j = 0; k > 0 && j < yk; ++j)
            m.columns[j] = column(cy, k, j);
        for (std::size_t j = 0; k > 0 && j < xk1; ++j) {
            auto& out = m.columns[yk + j];
            const auto& t = f(cx.generators[static_cast<std::size_t>(k - 1)][j]);
            if (t.is_nondegenerate())
                out.emplace_back(pos_y[t.generator], 1);
            for (const auto& [r, v] : column(cx, k - 1, j))
                out.emplace_back(yk1 + r, -v);
        }
        cone.boundary.push_back(std::move(m));
    }
    for (const auto& g : homology(cone, max_dim).groups)
        if (g.betti != 0 || !g.torsion.empty())
            return false;
    return true;
}

}  // namespace simpset
