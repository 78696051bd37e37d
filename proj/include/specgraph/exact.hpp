#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// symmetric matrices with exact entries; plain row-major storage
using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// polynomials store coefficients ascending: p[k] is the coefficient of x^k
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

// eigenvalue -> multiplicity, only for fully integral spectra
using Spectrum = std::map<long long, int>;

using Partition = std::vector<std::vector<int>>;

// ==== matrix construction ====

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix shifted(IntMatrix m, long long c);  // m + c I
RatMatrix to_rational(const IntMatrix& m);

// ==== exact linear algebra ====

// monic characteristic polynomial det(xI - M), Faddeev-LeVerrier
IntPoly char_poly(const IntMatrix& m);
RatPoly char_poly(const RatMatrix& m);

Int determinant(const IntMatrix& m);

// rank over the rationals, fraction-free elimination; rectangular ok
int rank(const IntMatrix& m);

struct Inertia {
    int positive = 0;
    int zero = 0;
    int negative = 0;
};

// symmetric congruence pivoting, exact; 2x2 blocks handle zero diagonals
Inertia inertia(RatMatrix m);

bool is_positive_semidefinite(const IntMatrix& m);
bool is_positive_definite(const IntMatrix& m);

RatMatrix rat_inverse(const RatMatrix& m);  // throws on singular input

// ==== polynomial helpers ====

Int poly_eval(const IntPoly& p, const Int& x);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_strip_x(const IntPoly& p);  // divide by the largest power of x

// number of distinct real eigenvalues of a symmetric matrix
int distinct_eigenvalue_count(const IntMatrix& m);

// ==== spectra ====

std::optional<Spectrum> integral_spectrum(const IntMatrix& m);
int multiplicity(const IntMatrix& m, long long k);

long long spectrum_total(const Spectrum& s);
std::vector<long long> spectrum_descending(const Spectrum& s);

struct InterlaceResult {
    bool holds = false;
    bool tight = false;
};

InterlaceResult interlaces(const Spectrum& sub, const Spectrum& sup);
// sub given by a real-rooted rational matrix (e.g. a quotient matrix);
// decided exactly through Sturm chains on its characteristic polynomial
InterlaceResult interlaces(const RatMatrix& sub, const Spectrum& sup);

// ==== quotient matrices ====

RatMatrix quotient_matrix(const IntMatrix& m, const Partition& pi);
bool is_equitable(const IntMatrix& m, const Partition& pi);

// ==== counting and Diophantine checks ====

Int spanning_tree_count(const Graph& g);

// connected bipartite g whose signless Laplace spectrum lies in {0..5}:
// |V| must factor as 2^a 3^b 5^c with a <= m2 + 2 m4, b <= m3, c <= m5
bool tree_count_admissible(const Graph& g, const Spectrum& q_spec);

struct MultiplicityFixed {
    long long m0 = 0, m2 = 0, m3 = 0;
    long long a10 = 0, a30 = 0, a11 = 0, a21 = 0;
};

// one-parameter solution family of the three trace identities:
// (m1, m4, a20) at parameter t is (m1 + 2t, m4 + t, a20 + 3t)
struct MultiplicityFamily {
    long long m1 = 0, m4 = 0, a20 = 0;
    std::array<long long, 3> at(long long t) const {
        return {m1 + 2 * t, m4 + t, a20 + 3 * t};
    }
};

std::optional<MultiplicityFamily> glg_multiplicity_solutions(const MultiplicityFixed& fixed);

// the four trace identities for a spectrum inside {-2..3}
bool adjacency_multiplicity_constraints(long long n, long long edges, long long triangles,
                                        const Spectrum& spec);

// a connected matrix with diameter D has at least D+1 distinct eigenvalues
bool distinct_eigenvalue_diameter_bound(const IntMatrix& m, int diameter);

}  // namespace specgraph
