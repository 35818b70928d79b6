#include "hodgeconn/freelie.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "hodgeconn/errors.hpp"

namespace hodge {

namespace {

using RatPoly = std::vector<mpq_class>;  // coefficients of tau^0, tau^1, ...

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

RatPoly poly_pow(const RatPoly& a, int k) {
  RatPoly r{1};
  for (int i = 0; i < k; ++i) r = poly_mul(r, a);
  return r;
}

// tau -> int_0^tau p(s) ds
RatPoly poly_integral(const RatPoly& p) {
  RatPoly r(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i] / mpq_class(static_cast<long>(i + 1));
  return r;
}

mpq_class poly_at_one(const RatPoly& p) {
  mpq_class s = 0;
  for (const auto& c : p) s += c;
  return s;
}

bool poly_zero(const RatPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

void drop_zeros(Tensor& t) {
  for (auto it = t.begin(); it != t.end();) it = sgn(it->second) == 0 ? t.erase(it) : std::next(it);
}

// Replace each letter i of `t` by images[i], truncating at max_weight.
Tensor substitute_letters(const Tensor& t, const std::vector<Tensor>& images, const Alphabet& target, int max_weight) {
  Tensor out;
  for (const auto& [w, c] : t) {
    Tensor prod{{Word{}, mpq_class(1)}};
    for (int l : w) prod = multiply(prod, images[l], target, max_weight);
    add_to(out, prod, c);
  }
  return out;
}

void enumerate_words(const Alphabet& a, int budget, Word& current, const std::function<void(const Word&)>& visit) {
  for (int l = 0; l < static_cast<int>(a.size()); ++l) {
    int w = a.weight(l);
    if (w > budget) continue;
    current.push_back(l);
    visit(current);
    enumerate_words(a, budget - w, current, visit);
    current.pop_back();
  }
}

std::shared_ptr<UniversalTables> compute_tables(int n) {
  auto t = std::make_shared<UniversalTables>();
  t->n = n;
  t->alpha = generator_alphabet(n, "a");
  t->z = generator_alphabet(n, "z");
  const Alphabet& al = t->alpha;

  // transport along tau -> (-tau, tau - 1), dU = -omega U, U(0) = 1;
  // omega = sum alpha_{p,q} (-tau)^{p-1} (tau-1)^{q-1} dtau
  std::vector<RatPoly> weight_fn;
  for (const auto& [p, q] : al.degrees)
    weight_fn.push_back(poly_mul(poly_pow({0, -1}, p - 1), poly_pow({-1, 1}, q - 1)));
  std::map<Word, RatPoly> term{{Word{}, RatPoly{1}}};
  Tensor u{{Word{}, mpq_class(1)}};
  while (!term.empty()) {
    std::map<Word, RatPoly> next;
    for (const auto& [w, c] : term) {
      int used = al.weight(w);
      for (int l = 0; l < static_cast<int>(al.size()); ++l) {
        if (used + al.weight(l) > n) continue;
        RatPoly integrand = poly_mul(weight_fn[l], c);
        RatPoly val = poly_integral(integrand);
        for (auto& x : val) x = -x;
        Word lw = concat(Word{l}, w);
        RatPoly& slot = next[lw];
        if (slot.size() < val.size()) slot.resize(val.size());
        for (std::size_t i = 0; i < val.size(); ++i) slot[i] += val[i];
      }
    }
    for (auto it = next.begin(); it != next.end();) it = poly_zero(it->second) ? next.erase(it) : std::next(it);
    for (const auto& [w, c] : next) {
      mpq_class v = poly_at_one(c);
      if (sgn(v) != 0) u[w] += v;
    }
    term = std::move(next);
  }
  drop_zeros(u);

  // z = log U
  Tensor x = u;
  x.erase(Word{});
  Tensor power = x, z;
  for (int k = 1; !power.empty(); ++k) {
    add_to(z, power, mpq_class(k % 2 ? 1 : -1, k));
    power = multiply(power, x, al, n);
  }

  std::map<std::size_t, Tensor> by_length;
  for (const auto& [w, c] : z) by_length[w.size()][w] = c;
  for (const auto& [len, part] : by_length) {
    Tensor expected;
    add_to(expected, part, mpq_class(static_cast<long>(len)));
    if (dynkin(part, al) != expected) throw MathViolation("log of the transport is not primitive");
  }

  std::map<Bidegree, Tensor> z_parts;
  for (const auto& [w, c] : z) z_parts[al.degree(w)][w] = c;
  for (int l = 0; l < static_cast<int>(al.size()); ++l) {
    Bidegree pq = al.degrees[l];
    Tensor part = z_parts[pq];
    mpq_class lead = part.count(Word{l}) ? part.at(Word{l}) : mpq_class(0);
    if (sgn(lead) == 0)
      throw MathViolation("zero leading coefficient at (" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")");
    t->leading[pq] = lead;
    t->z_in_alpha[pq] = lie_coordinates(part, al);
  }

  // back substitution, one generator at a time in weight order
  std::vector<Tensor> alpha_images(al.size());
  for (int l = 0; l < static_cast<int>(al.size()); ++l) {
    Bidegree pq = al.degrees[l];
    Tensor rest = z_parts[pq];
    rest.erase(Word{l});
    Tensor subst = substitute_letters(rest, alpha_images, t->z, n);
    Tensor img = letter(l);  // z letter with the same index
    add_to(img, subst, -1);
    Tensor scaled;
    add_to(scaled, img, 1 / t->leading[pq]);
    alpha_images[l] = scaled;
    t->alpha_in_z[pq] = lie_coordinates(scaled, t->z);
  }
  for (int l = 0; l < static_cast<int>(al.size()); ++l) {
    if (substitute_letters(z_parts[al.degrees[l]], alpha_images, t->z, n) != letter(l))
      throw MathViolation("generator change does not invert");
  }
  return t;
}

std::shared_ptr<UniversalTables> truncate_tables(const UniversalTables& full, int n) {
  auto t = std::make_shared<UniversalTables>();
  t->n = n;
  t->alpha = generator_alphabet(n, "a");
  t->z = generator_alphabet(n, "z");
  for (const auto& [pq, v] : full.z_in_alpha)
    if (pq.first + pq.second <= n) {
      t->z_in_alpha[pq] = v;
      t->alpha_in_z[pq] = full.alpha_in_z.at(pq);
      t->leading[pq] = full.leading.at(pq);
    }
  return t;
}

}  // namespace

int Alphabet::weight(const Word& w) const {
  int s = 0;
  for (int l : w) s += weight(l);
  return s;
}

Bidegree Alphabet::degree(const Word& w) const {
  Bidegree d{0, 0};
  for (int l : w) {
    d.first += degrees[l].first;
    d.second += degrees[l].second;
  }
  return d;
}

int Alphabet::find(Bidegree d) const {
  auto it = std::find(degrees.begin(), degrees.end(), d);
  return it == degrees.end() ? -1 : static_cast<int>(it - degrees.begin());
}

Alphabet generator_alphabet(int n, const std::string& symbol) {
  Alphabet a;
  for (int w = 2; w <= n; ++w)
    for (int p = 1; p < w; ++p) {
      a.degrees.emplace_back(p, w - p);
      a.names.push_back(symbol + std::to_string(p) + "_" + std::to_string(w - p));
    }
  return a;
}

Alphabet plane_alphabet() { return Alphabet{{{1, 0}, {0, 1}}, {"t1", "t2"}}; }

void add_to(Tensor& t, const Tensor& u, const mpq_class& scale) {
  if (sgn(scale) == 0) return;
  for (const auto& [w, c] : u) {
    auto [it, fresh] = t.try_emplace(w, 0);
    it->second += c * scale;
    if (sgn(it->second) == 0) t.erase(it);
  }
}

Tensor multiply(const Tensor& a, const Tensor& b, const Alphabet& alphabet, int max_weight) {
  Tensor r;
  for (const auto& [wa, ca] : a) {
    int wta = max_weight >= 0 ? alphabet.weight(wa) : 0;
    for (const auto& [wb, cb] : b) {
      if (max_weight >= 0 && wta + alphabet.weight(wb) > max_weight) continue;
      r[concat(wa, wb)] += ca * cb;
    }
  }
  drop_zeros(r);
  return r;
}

Tensor bracket(const Tensor& a, const Tensor& b, const Alphabet& alphabet, int max_weight) {
  Tensor r = multiply(a, b, alphabet, max_weight);
  add_to(r, multiply(b, a, alphabet, max_weight), -1);
  return r;
}

Tensor letter(int i) { return Tensor{{Word{i}, mpq_class(1)}}; }

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
  return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + i, w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + i), v};
  }
  throw InputError("standard factorization needs a Lyndon word of length >= 2");
}

std::map<Bidegree, std::vector<Word>> lyndon_basis(const Alphabet& alphabet, int n) {
  std::map<Bidegree, std::vector<Word>> out;
  Word current;
  enumerate_words(alphabet, n, current, [&](const Word& w) {
    if (is_lyndon(w)) out[alphabet.degree(w)].push_back(w);
  });
  for (auto& [d, ws] : out) std::sort(ws.begin(), ws.end());
  return out;
}

Tensor expand_lyndon(const Word& w, const Alphabet& alphabet) {
  if (w.size() == 1) return letter(w[0]);
  auto [u, v] = standard_factorization(w);
  return bracket(expand_lyndon(u, alphabet), expand_lyndon(v, alphabet), alphabet);
}

Tensor expand(const LiePolynomial& l, const Alphabet& alphabet) {
  Tensor t;
  for (const auto& [w, c] : l) add_to(t, expand_lyndon(w, alphabet), c);
  return t;
}

LiePolynomial lie_coordinates(const Tensor& t, const Alphabet& alphabet) {
  Tensor rest = t;
  LiePolynomial out;
  while (!rest.empty()) {
    auto [w, c] = *rest.begin();
    if (!is_lyndon(w)) throw MathViolation("tensor is not a Lie element");
    out[w] = c;
    add_to(rest, expand_lyndon(w, alphabet), -c);
  }
  return out;
}

LiePolynomial lie_bracket(const LiePolynomial& a, const LiePolynomial& b, const Alphabet& alphabet) {
  return lie_coordinates(bracket(expand(a, alphabet), expand(b, alphabet), alphabet), alphabet);
}

Matrix substitute(const LiePolynomial& l, const std::vector<Matrix>& matrices) {
  if (matrices.empty()) throw DimensionMismatch("substitute needs at least one matrix");
  const std::size_t n = matrices.front().rows();
  for (const auto& m : matrices)
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("substituted matrices must share one square shape");
  std::map<Word, Matrix> memo;
  std::function<Matrix(const Word&)> eval = [&](const Word& w) -> Matrix {
    if (w.size() == 1) {
      if (w[0] >= static_cast<int>(matrices.size())) throw DimensionMismatch("no matrix for letter " + std::to_string(w[0]));
      return matrices[w[0]];
    }
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    auto [u, v] = standard_factorization(w);
    Matrix r = commutator(eval(u), eval(v));
    memo.emplace(w, r);
    return r;
  };
  Matrix out(n, n);
  for (const auto& [w, c] : l) out += eval(w) * Scalar(c);
  return out;
}

Tensor dynkin(const Tensor& t, const Alphabet& alphabet) {
  Tensor out;
  for (const auto& [w, c] : t) {
    if (w.empty()) continue;
    Tensor r = letter(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) r = bracket(r, letter(w[i]), alphabet);
    add_to(out, r, c);
  }
  return out;
}

std::string lie_str(const LiePolynomial& l, const Alphabet& alphabet) {
  if (l.empty()) return "0";
  std::function<std::string(const Word&)> show = [&](const Word& w) -> std::string {
    if (w.size() == 1) return alphabet.names[w[0]];
    auto [u, v] = standard_factorization(w);
    return "[" + show(u) + "," + show(v) + "]";
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : l) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    mpq_class a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << show(w);
    first = false;
  }
  return os.str();
}

std::shared_ptr<const UniversalTables> universal_tables(int n) {
  if (n < 2) throw InputError("truncation must be at least 2");
  static std::mutex mu;
  static std::shared_ptr<UniversalTables> largest;
  static std::map<int, std::shared_ptr<const UniversalTables>> by_n;
  std::lock_guard<std::mutex> lock(mu);
  auto it = by_n.find(n);
  if (it != by_n.end()) return it->second;
  if (!largest || largest->n < n) {
    largest = compute_tables(n);
    by_n.clear();
  }
  std::shared_ptr<const UniversalTables> t = largest->n == n ? largest : truncate_tables(*largest, n);
  by_n.emplace(n, t);
  return t;
}

mpq_class abelian_integral(int p, int q) {
  // -t^{p-1} (-1-t)^{q-1} expanded in t, integrated over [-1, 0]
  RatPoly f = poly_mul(poly_pow({0, 1}, p - 1), poly_pow({-1, -1}, q - 1));
  mpq_class s = 0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    // int_{-1}^0 t^k dt = -(-1)^{k+1}/(k+1)
    mpq_class v(k % 2 == 0 ? 1 : -1, static_cast<long>(k + 1));
    s += f[k] * v;
  }
  return -s;
}

std::vector<CoefficientComparison> compare_leading_coefficients(int n) {
  auto t = universal_tables(n);
  std::vector<CoefficientComparison> out;
  for (const auto& [pq, lead] : t->leading) {
    auto [p, q] = pq;
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), p + q, p);
    mpq_class stated((p + q) % 2 == 0 ? binom : mpz_class(-binom));
    out.push_back({pq, lead, stated, lead == stated});
  }
  return out;
}

std::map<Bidegree, LiePolynomial> commutant_generators(int n) {
  Alphabet plane = plane_alphabet();
  std::map<Bidegree, LiePolynomial> out;
  for (int w = 2; w <= n; ++w)
    for (int p = 1; p < w; ++p) {
      int q = w - p;
      Tensor t = letter(1);
      for (int i = 0; i < p; ++i) t = bracket(letter(0), t, plane);
      for (int i = 1; i < q; ++i) t = bracket(letter(1), t, plane);
      out[{p, q}] = lie_coordinates(t, plane);
    }
  return out;
}

std::vector<RankCheck> commutant_rank_checks(int n) {
  Alphabet plane = plane_alphabet();
  Alphabet zs = generator_alphabet(n, "z");
  auto phi = commutant_generators(n);
  std::vector<Tensor> images;
  for (const auto& d : zs.degrees) images.push_back(expand(phi.at(d), plane));
  auto z_basis = lyndon_basis(zs, n);
  auto t_basis = lyndon_basis(plane, n);

  std::function<Tensor(const Word&)> image_of = [&](const Word& w) -> Tensor {
    if (w.size() == 1) return images[w[0]];
    auto [u, v] = standard_factorization(w);
    return bracket(image_of(u), image_of(v), plane);
  };

  std::vector<RankCheck> out;
  for (int w = 2; w <= n; ++w)
    for (int a = 1; a < w; ++a) {
      RankCheck rc;
      rc.degree = {a, w - a};
      auto zi = z_basis.find(rc.degree);
      auto ti = t_basis.find(rc.degree);
      rc.free_dim = zi == z_basis.end() ? 0 : zi->second.size();
      rc.target_dim = ti == t_basis.end() ? 0 : ti->second.size();
      if (rc.free_dim > 0) {
        std::vector<Tensor> rows;
        std::map<Word, std::size_t> column;
        for (const auto& word : zi->second) {
          rows.push_back(image_of(word));
          for (const auto& [tw, c] : rows.back()) column.try_emplace(tw, column.size());
        }
        Matrix m(rows.size(), column.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (const auto& [tw, c] : rows[r]) m(r, column.at(tw)) = Scalar(c);
        rc.image_rank = rank(m);
      }
      out.push_back(rc);
    }
  return out;
}

}  // namespace hodge
