#include "specgraph/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace specgraph {

namespace {

// ==== generic matrix utilities ====

template <class T>
void require_square(const std::vector<std::vector<T>>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::runtime_error("matrix not square");
}

template <class T>
void require_symmetric(const std::vector<std::vector<T>>& m) {
    require_square(m);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) throw std::runtime_error("matrix not symmetric");
}

template <class T>
std::vector<std::vector<T>> mat_mul(const std::vector<std::vector<T>>& a,
                                    const std::vector<std::vector<T>>& b) {
    size_t n = a.size();
    std::vector<std::vector<T>> c(n, std::vector<T>(n, T(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

template <class T>
std::vector<T> fl_char_poly(const std::vector<std::vector<T>>& a) {
    require_square(a);
    int n = static_cast<int>(a.size());
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    if (n == 0) return c;
    auto b = a;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            auto m = b;
            for (int i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
            b = mat_mul(a, m);
        }
        T tr(0);
        for (int i = 0; i < n; ++i) tr += b[i][i];
        c[n - k] = -tr / T(k);  // divisions are exact in this recurrence
    }
    return c;
}

// one-step fraction-free elimination; every division is exact
template <class T>
int bareiss_rank(std::vector<std::vector<T>> a) {
    int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(a[0].size());
    T prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = T(0);
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

template <class T>
T bareiss_det(std::vector<std::vector<T>> a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return T(1);
    T prev(1);
    bool flip = false;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) return T(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            flip = !flip;
        }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j)
                a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) / prev;
            a[i][c] = T(0);
        }
        prev = a[c][c];
    }
    T det = a[n - 1][n - 1];
    return flip ? T(-det) : det;
}

// ==== rational polynomial machinery ====

int deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

void normalize(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly monic(RatPoly p) {
    normalize(p);
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long long>(i)));
    normalize(d);
    return d;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    normalize(a);
    return a;
}

std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
    normalize(a);
    if (b.empty()) throw std::runtime_error("polynomial division by zero");
    RatPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
    while (deg(a) >= deg(b)) {
        Rat f = a.back() / b.back();
        int shift = deg(a) - deg(b);
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        normalize(a);
    }
    normalize(q);
    return {q, a};
}

RatPoly poly_div_exact(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.empty()) throw std::runtime_error("polynomial division not exact");
    return q;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Rat poly_eval_rat(const RatPoly& p, const Rat& x) {
    Rat v(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

// squarefree decomposition: f = prod factor^mult, Yun's algorithm
std::vector<std::pair<RatPoly, int>> yun(const RatPoly& f0) {
    std::vector<std::pair<RatPoly, int>> out;
    RatPoly f = monic(f0);
    if (deg(f) < 1) return out;
    RatPoly fp = derivative(f);
    RatPoly g = poly_gcd(f, fp);
    RatPoly b = poly_div_exact(f, g);
    RatPoly c = poly_div_exact(fp, g);
    RatPoly d = poly_sub(c, derivative(b));
    int i = 1;
    while (deg(b) > 0) {
        RatPoly a = poly_gcd(b, d);
        if (deg(a) > 0) out.push_back({a, i});
        b = poly_div_exact(b, a);
        c = poly_div_exact(d, a);
        d = poly_sub(c, derivative(b));
        ++i;
    }
    return out;
}

// quotient after removing a known root, with an exactness guard
RatPoly deflate(const RatPoly& p, long long root) {
    int d = deg(p);
    RatPoly q(d, Rat(0));
    q[d - 1] = p[d];
    for (int i = d - 2; i >= 0; --i) q[i] = p[i + 1] + Rat(root) * q[i + 1];
    if (p[0] + Rat(root) * q[0] != 0) throw std::runtime_error("deflation at a non-root");
    normalize(q);
    return q;
}

std::vector<RatPoly> sturm_chain(const RatPoly& q) {
    std::vector<RatPoly> ch;
    ch.push_back(q);
    RatPoly d = derivative(q);
    if (!d.empty()) ch.push_back(d);
    while (ch.size() >= 2) {
        auto r = poly_divmod(ch[ch.size() - 2], ch.back()).second;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        ch.push_back(std::move(r));
    }
    return ch;
}

int sign_variations_at(const std::vector<RatPoly>& ch, const Rat& t) {
    int var = 0, last = 0;
    for (const auto& p : ch) {
        Rat v = poly_eval_rat(p, t);
        int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

long long rat_ceil(const Rat& x) {
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);  // always positive
    Int q = num / den;
    if (num > 0 && num % den != 0) q += 1;
    return q.convert_to<long long>();
}

// eigenvalue tokens in descending order: integer values, or known only
// to lie in the open unit interval (low, low + 1)
struct EigenToken {
    bool integral;
    long long value;  // when integral
    long long low;    // when not
};

std::vector<EigenToken> eigen_tokens(const RatMatrix& m, long long window_lo,
                                     long long window_hi) {
    RatPoly p = char_poly(m);
    long long lo = window_lo, hi = window_hi;
    Rat bound(1);
    for (int i = 0; i < deg(p); ++i)
        if (boost::multiprecision::abs(p[i]) > bound - 1) bound = 1 + boost::multiprecision::abs(p[i]);
    long long b = rat_ceil(bound);
    lo = std::min(lo, -b);
    hi = std::max(hi, b);

    std::map<long long, int> ints;          // integer roots with multiplicity
    std::map<long long, int> betweens;      // key k: roots in (k, k+1) with multiplicity
    long long found = 0;
    for (auto& [factor, mult] : yun(p)) {
        RatPoly q = factor;
        for (long long k = lo; k <= hi; ++k) {
            if (deg(q) >= 1 && poly_eval_rat(q, Rat(k)) == 0) {
                ints[k] += mult;
                found += mult;
                q = deflate(q, k);
            }
        }
        if (deg(q) >= 1) {
            auto ch = sturm_chain(q);
            int prev_var = sign_variations_at(ch, Rat(lo));
            for (long long k = lo; k < hi; ++k) {
                int next_var = sign_variations_at(ch, Rat(k + 1));
                int cnt = prev_var - next_var;
                if (cnt > 0) {
                    betweens[k] += mult * cnt;
                    found += static_cast<long long>(mult) * cnt;
                }
                prev_var = next_var;
            }
        }
    }
    if (found != static_cast<long long>(m.size()))
        throw std::runtime_error("characteristic polynomial not real-rooted");

    std::vector<EigenToken> tokens;
    for (long long k = hi; k >= lo; --k) {
        auto it = ints.find(k);
        if (it != ints.end())
            for (int c = 0; c < it->second; ++c) tokens.push_back({true, k, 0});
        auto jt = betweens.find(k - 1);
        if (jt != betweens.end())
            for (int c = 0; c < jt->second; ++c) tokens.push_back({false, 0, k - 1});
    }
    return tokens;
}

}  // namespace

// ==== matrix construction ====

IntMatrix adjacency_matrix(const Graph& g) {
    int n = g.order();
    IntMatrix m(n, std::vector<Int>(n, Int(0)));
    for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
    return m;
}

IntMatrix shifted(IntMatrix m, long long c) {
    require_square(m);
    for (size_t i = 0; i < m.size(); ++i) m[i][i] += c;
    return m;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (const auto& x : m[i]) r[i].push_back(Rat(x));
    return r;
}

// ==== exact linear algebra ====

IntPoly char_poly(const IntMatrix& m) { return fl_char_poly(m); }
RatPoly char_poly(const RatMatrix& m) { return fl_char_poly(m); }

Int determinant(const IntMatrix& m) {
    require_square(m);
    return bareiss_det(m);
}

int rank(const IntMatrix& m) {
    if (m.empty() || m[0].empty()) return 0;
    // intermediate values are minors; Hadamard bound decides the int64 path
    Int cap = Int(1) << 61;
    Int prod = 1;
    bool fits = true;
    for (const auto& row : m) {
        Int s(0);
        for (const auto& x : row) s += x * x;
        if (s > 1) prod *= s;
        if (prod > cap) {
            fits = false;
            break;
        }
    }
    if (fits) {
        std::vector<std::vector<long long>> a(m.size());
        for (size_t i = 0; i < m.size(); ++i)
            for (const auto& x : m[i]) a[i].push_back(x.convert_to<long long>());
        return bareiss_rank(std::move(a));
    }
    return bareiss_rank(m);
}

Inertia inertia(RatMatrix m) {
    require_symmetric(m);
    int n = static_cast<int>(m.size());
    std::vector<char> done(n, 0);
    auto active = [&](int i) { return !done[i]; };
    Inertia res;
    int remaining = n;
    while (remaining > 0) {
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (active(i) && m[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv >= 0) {
            Rat d = m[piv][piv];
            (d > 0 ? res.positive : res.negative)++;
            done[piv] = 1;
            --remaining;
            for (int u = 0; u < n; ++u) {
                if (!active(u) || m[u][piv] == 0) continue;
                for (int v = 0; v < n; ++v)
                    if (active(v)) m[u][v] -= m[u][piv] * m[piv][v] / d;
            }
            continue;
        }
        // all active diagonal entries vanish: use an antidiagonal 2x2 block
        int bi = -1, bj = -1;
        for (int u = 0; u < n && bi < 0; ++u) {
            if (!active(u)) continue;
            for (int v = u + 1; v < n; ++v)
                if (active(v) && m[u][v] != 0) {
                    bi = u;
                    bj = v;
                    break;
                }
        }
        if (bi < 0) {
            res.zero += remaining;
            break;
        }
        Rat a = m[bi][bj];
        res.positive++;
        res.negative++;
        done[bi] = done[bj] = 1;
        remaining -= 2;
        for (int u = 0; u < n; ++u) {
            if (!active(u)) continue;
            for (int v = 0; v < n; ++v)
                if (active(v)) m[u][v] -= (m[u][bi] * m[bj][v] + m[u][bj] * m[bi][v]) / a;
        }
    }
    return res;
}

bool is_positive_semidefinite(const IntMatrix& m) {
    require_symmetric(m);
    return inertia(to_rational(m)).negative == 0;
}

bool is_positive_definite(const IntMatrix& m) {
    require_symmetric(m);
    Inertia in = inertia(to_rational(m));
    return in.negative == 0 && in.zero == 0;
}

RatMatrix rat_inverse(const RatMatrix& m) {
    require_square(m);
    int n = static_cast<int>(m.size());
    RatMatrix a = m;
    RatMatrix inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) throw std::runtime_error("matrix singular");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rat d = a[c][c];
        for (int j = 0; j < n; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// ==== polynomial helpers ====

Int poly_eval(const IntPoly& p, const Int& x) {
    Int v(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

IntPoly poly_strip_x(const IntPoly& p) {
    size_t s = 0;
    while (s < p.size() && p[s] == 0) ++s;
    return IntPoly(p.begin() + s, p.end());
}

int distinct_eigenvalue_count(const IntMatrix& m) {
    require_symmetric(m);
    RatPoly p;
    for (const auto& c : char_poly(m)) p.push_back(Rat(c));
    int count = 0;
    for (auto& [factor, mult] : yun(p)) count += deg(factor);
    return count;
}

// ==== spectra ====

std::optional<Spectrum> integral_spectrum(const IntMatrix& m) {
    require_symmetric(m);
    int n = static_cast<int>(m.size());
    if (n == 0) return Spectrum{};
    IntPoly p = char_poly(m);
    int s = 0;
    while (p[s] == 0) ++s;
    Int trail = p[s];
    Int bound(0);
    for (const auto& row : m) {
        Int r(0);
        for (const auto& x : row) r += boost::multiprecision::abs(x);
        bound = std::max(bound, r);
    }
    long long b = bound.convert_to<long long>();
    Spectrum out;
    int total = 0;
    if (s > 0) {
        out[0] = s;
        total += s;
    }
    for (long long d = -b; d <= b; ++d) {
        if (d == 0 || trail % d != 0) continue;
        int mult = n - rank(shifted(m, -d));
        if (mult > 0) {
            out[d] = mult;
            total += mult;
        }
    }
    if (total != n) return std::nullopt;
    return out;
}

int multiplicity(const IntMatrix& m, long long k) {
    require_symmetric(m);
    return static_cast<int>(m.size()) - rank(shifted(m, -k));
}

long long spectrum_total(const Spectrum& s) {
    long long t = 0;
    for (auto& [v, m] : s) t += m;
    return t;
}

std::vector<long long> spectrum_descending(const Spectrum& s) {
    std::vector<long long> out;
    for (auto it = s.rbegin(); it != s.rend(); ++it)
        for (int c = 0; c < it->second; ++c) out.push_back(it->first);
    return out;
}

InterlaceResult interlaces(const Spectrum& sub, const Spectrum& sup) {
    auto lam = spectrum_descending(sub);
    auto mu = spectrum_descending(sup);
    size_t n = lam.size(), m = mu.size();
    if (n > m) throw std::runtime_error("interlacing: sub exceeds sup");
    InterlaceResult res;
    res.holds = true;
    for (size_t i = 0; i < n; ++i)
        if (lam[i] > mu[i] || lam[i] < mu[i + m - n]) res.holds = false;
    if (!res.holds) return res;
    size_t l0 = 0;
    while (l0 < n && lam[l0] == mu[l0]) ++l0;
    size_t s0 = 0;
    while (s0 < n && lam[n - 1 - s0] == mu[m - 1 - s0]) ++s0;
    res.tight = l0 + s0 >= n;
    return res;
}

InterlaceResult interlaces(const RatMatrix& sub, const Spectrum& sup) {
    require_square(sub);
    size_t r = sub.size();
    auto mu = spectrum_descending(sup);
    size_t m = mu.size();
    if (r > m) throw std::runtime_error("interlacing: sub exceeds sup");
    if (r == 0) return {true, true};
    if (m == 0) throw std::runtime_error("interlacing: empty sup");
    long long mu_min = mu.back(), mu_max = mu.front();
    auto tokens = eigen_tokens(sub, mu_min - 1, mu_max + 1);

    InterlaceResult res;
    res.holds = true;
    for (long long t = mu_min; t <= mu_max && res.holds; ++t) {
        long long sub_gt = 0, sub_lt = 0;
        for (const auto& tk : tokens) {
            if (tk.integral) {
                if (tk.value > t) ++sub_gt;
                if (tk.value < t) ++sub_lt;
            } else {
                if (tk.low >= t) ++sub_gt;
                if (tk.low < t) ++sub_lt;
            }
        }
        long long sup_gt = 0, sup_lt = 0;
        for (long long v : mu) {
            if (v > t) ++sup_gt;
            if (v < t) ++sup_lt;
        }
        if (sub_gt > sup_gt || sub_lt > sup_lt) res.holds = false;
    }
    if (!res.holds) return res;
    size_t l0 = 0;
    while (l0 < r && tokens[l0].integral && tokens[l0].value == mu[l0]) ++l0;
    size_t s0 = 0;
    while (s0 < r && tokens[r - 1 - s0].integral && tokens[r - 1 - s0].value == mu[m - 1 - s0])
        ++s0;
    res.tight = l0 + s0 >= r;
    return res;
}

// ==== quotient matrices ====

namespace {

void require_partition(size_t n, const Partition& pi) {
    std::vector<char> seen(n, 0);
    for (const auto& cell : pi) {
        if (cell.empty()) throw std::runtime_error("partition has an empty cell");
        for (int v : cell) {
            if (v < 0 || static_cast<size_t>(v) >= n || seen[v])
                throw std::runtime_error("partition invalid");
            seen[v] = 1;
        }
    }
    for (char c : seen)
        if (!c) throw std::runtime_error("partition does not cover the index set");
}

}  // namespace

RatMatrix quotient_matrix(const IntMatrix& m, const Partition& pi) {
    require_square(m);
    require_partition(m.size(), pi);
    size_t t = pi.size();
    RatMatrix b(t, std::vector<Rat>(t, Rat(0)));
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j) {
            Int sum(0);
            for (int u : pi[i])
                for (int v : pi[j]) sum += m[u][v];
            b[i][j] = Rat(sum, Int(pi[i].size()));
        }
    return b;
}

bool is_equitable(const IntMatrix& m, const Partition& pi) {
    require_square(m);
    require_partition(m.size(), pi);
    for (const auto& ci : pi)
        for (const auto& cj : pi) {
            Int first(0);
            bool have = false;
            for (int u : ci) {
                Int s(0);
                for (int v : cj) s += m[u][v];
                if (!have) {
                    first = s;
                    have = true;
                } else if (s != first) {
                    return false;
                }
            }
        }
    return true;
}

// ==== counting and Diophantine checks ====

Int spanning_tree_count(const Graph& g) {
    int n = g.order();
    if (n == 0) throw std::runtime_error("spanning tree count: empty graph");
    if (!structure_report(g).connected)
        throw std::runtime_error("spanning tree count: disconnected graph");
    // any cofactor of the Laplace matrix
    IntMatrix l(n - 1, std::vector<Int>(n - 1, Int(0)));
    for (int u = 1; u < n; ++u) {
        l[u - 1][u - 1] = g.degree(u);
        for (int v = 1; v < n; ++v)
            if (u != v && g.adjacent(u, v)) l[u - 1][v - 1] = -1;
    }
    return bareiss_det(l);
}

bool tree_count_admissible(const Graph& g, const Spectrum& q_spec) {
    auto rep = structure_report(g);
    bool ok = g.order() > 0 && rep.connected && rep.bipartite &&
              spectrum_total(q_spec) == g.order();
    if (ok)
        for (auto& [v, m] : q_spec)
            if (v < 0 || v > 5 || m <= 0) ok = false;
    if (!ok) throw std::runtime_error("tree count admissibility: bad input");
    auto mult_of = [&](long long k) {
        auto it = q_spec.find(k);
        return it == q_spec.end() ? 0LL : static_cast<long long>(it->second);
    };
    long long n = g.order();
    long long a = 0, b = 0, c = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++a;
    }
    while (n % 3 == 0) {
        n /= 3;
        ++b;
    }
    while (n % 5 == 0) {
        n /= 5;
        ++c;
    }
    if (n != 1) return false;
    return a <= mult_of(2) + 2 * mult_of(4) && b <= mult_of(3) && c <= mult_of(5);
}

std::optional<MultiplicityFamily> glg_multiplicity_solutions(const MultiplicityFixed& fx) {
    for (long long v : {fx.m0, fx.m2, fx.m3, fx.a10, fx.a30, fx.a11, fx.a21})
        if (v < 0) throw std::runtime_error("negative multiplicity input");
    long long r1 = fx.a10 + fx.a30 + fx.a11 + fx.a21 - fx.m0 - fx.m2 - fx.m3 - 1;
    long long r2 = fx.a10 + 3 * fx.a30 + 3 * fx.a11 + 4 * fx.a21 - 2 * fx.m2 - 3 * fx.m3 - 5;
    long long r3 =
        2 * fx.a10 + 12 * fx.a30 + 10 * fx.a11 + 18 * fx.a21 - 4 * fx.m2 - 9 * fx.m3 - 25;
    if (r3 != 5 * r2 - 4 * r1) return std::nullopt;
    long long a20 = ((r1 - r2) % 3 + 3) % 3;
    auto m4_at = [&](long long a) { return (r2 - r1 + a) / 3; };
    auto m1_at = [&](long long a) { return (4 * r1 - r2 + 2 * a) / 3; };
    while (m4_at(a20) < 0 || m1_at(a20) < 0) a20 += 3;
    return MultiplicityFamily{m1_at(a20), m4_at(a20), a20};
}

bool adjacency_multiplicity_constraints(long long n, long long edges, long long triangles,
                                        const Spectrum& spec) {
    long long s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    for (auto& [v, m] : spec) {
        if (v < -2 || v > 3 || m <= 0) return false;
        s0 += m;
        s1 += v * m;
        s2 += v * v * m;
        s3 += v * v * v * m;
    }
    return s0 == n && s1 == 0 && s2 == 2 * edges && s3 == 6 * triangles;
}

bool distinct_eigenvalue_diameter_bound(const IntMatrix& m, int diameter) {
    return distinct_eigenvalue_count(m) >= diameter + 1;
}

}  // namespace specgraph
