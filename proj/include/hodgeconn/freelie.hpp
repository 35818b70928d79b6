#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hodgeconn/bigraded.hpp"
#include "hodgeconn/matrix.hpp"

namespace hodge {

/// A word is a sequence of letter indices; letters compare by index.
using Word = std::vector<int>;

/// Letters with bidegrees (a letter of bidegree (p, q) lowers degrees by
/// (p, q) when represented). Letter i is named names[i].
struct Alphabet {
  std::vector<Bidegree> degrees;
  std::vector<std::string> names;

  std::size_t size() const { return degrees.size(); }
  int weight(int letter) const { return degrees[letter].first + degrees[letter].second; }
  int weight(const Word& w) const;
  Bidegree degree(const Word& w) const;
  /// Letter index with the given bidegree, or -1.
  int find(Bidegree d) const;
};

/// Generators x_{p,q}, p, q >= 1, p + q <= n, ordered by (p + q, p).
Alphabet generator_alphabet(int n, const std::string& symbol);
/// Two letters t1, t2 of bidegrees (1, 0) and (0, 1).
Alphabet plane_alphabet();

/// Noncommutative polynomial: word -> rational coefficient, zeros omitted.
using Tensor = std::map<Word, mpq_class>;

void add_to(Tensor& t, const Tensor& u, const mpq_class& scale = 1);
/// Product, dropping words of weight above max_weight (no bound if < 0).
Tensor multiply(const Tensor& a, const Tensor& b, const Alphabet& alphabet, int max_weight = -1);
Tensor bracket(const Tensor& a, const Tensor& b, const Alphabet& alphabet, int max_weight = -1);
Tensor letter(int i);

/// Lie polynomial in Lyndon coordinates: Lyndon word -> coefficient.
using LiePolynomial = std::map<Word, mpq_class>;

bool is_lyndon(const Word& w);
/// Standard factorization w = u v with v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);
/// Lyndon words of total weight <= n, grouped by bidegree, each group sorted.
std::map<Bidegree, std::vector<Word>> lyndon_basis(const Alphabet& alphabet, int n);

/// Bracketed expansion of a Lyndon basis element in the tensor algebra.
Tensor expand_lyndon(const Word& w, const Alphabet& alphabet);
Tensor expand(const LiePolynomial& l, const Alphabet& alphabet);
/// Lyndon coordinates of a Lie element. Throws MathViolation when t is not Lie.
LiePolynomial lie_coordinates(const Tensor& t, const Alphabet& alphabet);
LiePolynomial lie_bracket(const LiePolynomial& a, const LiePolynomial& b, const Alphabet& alphabet);

/// Evaluate with letter i represented by matrices[i]; brackets become
/// commutators.
Matrix substitute(const LiePolynomial& l, const std::vector<Matrix>& matrices);

/// Left-normed Dynkin bracketing w -> [[..[a1, a2], ..], ak].
Tensor dynkin(const Tensor& t, const Alphabet& alphabet);

std::string lie_str(const LiePolynomial& l, const Alphabet& alphabet);

/// Universal tables up to weight n.
///
/// z_in_alpha[(p,q)] is the (p,q) component of log of the path-ordered
/// exponential along the hypotenuse, over the alpha alphabet;
/// alpha_in_z[(p,q)] expresses alpha_{p,q} in the z alphabet.
struct UniversalTables {
  int n = 0;
  Alphabet alpha;
  Alphabet z;
  std::map<Bidegree, LiePolynomial> z_in_alpha;
  std::map<Bidegree, LiePolynomial> alpha_in_z;
  /// Coefficient of alpha_{p,q} in z_{p,q}.
  std::map<Bidegree, mpq_class> leading;
};

/// Computed once per process for the largest n requested and truncated for
/// smaller n. Thread-safe. Throws MathViolation if a structural self-check
/// (primitivity, triangularity, nonzero leading term, inversion) fails.
std::shared_ptr<const UniversalTables> universal_tables(int n);

/// -int_{-1}^{0} t^{p-1} (-1-t)^{q-1} dt, computed directly.
mpq_class abelian_integral(int p, int q);

struct CoefficientComparison {
  Bidegree pq;
  mpq_class computed;
  mpq_class stated;  // (-1)^{p+q} binomial(p+q, p)
  bool agrees = false;
};
std::vector<CoefficientComparison> compare_leading_coefficients(int n);

/// phi(z_{p,q}) = ad(t2)^{q-1} ad(t1)^p (t2) over the plane alphabet.
std::map<Bidegree, LiePolynomial> commutant_generators(int n);

struct RankCheck {
  Bidegree degree;
  std::size_t free_dim = 0;     // Lyndon words in the z letters
  std::size_t target_dim = 0;   // Lyndon words in t1, t2
  std::size_t image_rank = 0;
  bool ok() const { return free_dim == image_rank && target_dim == image_rank; }
};
/// One rank check per bidegree (a, b), a, b >= 1, a + b <= n.
std::vector<RankCheck> commutant_rank_checks(int n);

}  // namespace hodge
