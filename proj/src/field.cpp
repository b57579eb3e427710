#include "widthlab/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace widthlab {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p), coefficients low-degree first, trailing zeros
// stripped.  Only used during table construction.
using Poly = std::vector<int>;

void strip(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  strip(a);
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int da = static_cast<int>(a.size()) - 1;
    // m is monic, so the quotient coefficient is just the leading entry.
    const int c = a[da];
    for (int i = 0; i <= dm; ++i) {
      int& t = a[da - dm + i];
      t = ((t - c * m[i]) % p + p) % p;
    }
    strip(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  strip(r);
  return r;
}

// Monic polynomial of degree d whose non-leading coefficients are the base-p
// digits of v.
Poly monic_from_value(long long v, int d, int p) {
  Poly f(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[i] = static_cast<int>(v % p);
    v /= p;
  }
  f[d] = 1;
  return f;
}

// Trial division against every monic polynomial of degree 1..d/2.
bool is_irreducible(const Poly& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int t = 1; 2 * t <= d; ++t) {
    long long count = 1;
    for (int i = 0; i < t; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
      Poly g = monic_from_value(v, t, p);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly value_to_poly(int v, int p) {
  Poly a;
  while (v > 0) {
    a.push_back(v % p);
    v /= p;
  }
  return a;
}

int poly_to_value(const Poly& a, int p) {
  int v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

}  // namespace

struct Field::Tables {
  int p = 0;
  int e = 0;
  int q = 0;
  std::vector<int> modulus;  // c0..ce, empty for e == 1
  std::vector<Elem> add;     // q*q
  std::vector<Elem> mul;     // q*q
  std::vector<Elem> neg;     // q
  std::vector<Elem> inv;     // q (entry 0 unused)
  std::vector<Elem> frob;    // e*q, frob[i*q + a] = a^(p^i)
};

Field::Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

Field Field::make(int p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("field: characteristic must be prime, got " + std::to_string(p));
  if (e < 1) throw std::invalid_argument("field: degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw std::invalid_argument("field: order " + std::to_string(p) + "^" + std::to_string(e) +
                                  " exceeds the supported maximum " + std::to_string(kMaxOrder));
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<int>(q);

  Poly mod;
  if (e > 1) {
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
      Poly f = monic_from_value(v, e, p);
      if (is_irreducible(f, p)) {
        mod = f;
        break;
      }
    }
    t->modulus.assign(mod.begin(), mod.end());
  }

  const int n = t->q;
  t->add.resize(n * n);
  t->mul.resize(n * n);
  t->neg.resize(n);
  t->inv.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (e == 1) {
        t->add[a * n + b] = static_cast<Elem>((a + b) % p);
        t->mul[a * n + b] = static_cast<Elem>((a * b) % p);
      } else {
        Poly pa = value_to_poly(a, p), pb = value_to_poly(b, p);
        Poly s(std::max(pa.size(), pb.size()), 0);
        for (size_t i = 0; i < s.size(); ++i) {
          int x = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
          s[i] = x % p;
        }
        strip(s);
        t->add[a * n + b] = static_cast<Elem>(poly_to_value(s, p));
        t->mul[a * n + b] = static_cast<Elem>(poly_to_value(poly_mod(poly_mul(pa, pb, p), mod, p), p));
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (t->add[a * n + b] == 0) t->neg[a] = static_cast<Elem>(b);
      if (a != 0 && t->mul[a * n + b] == 1) t->inv[a] = static_cast<Elem>(b);
    }
  }
  t->frob.resize(e * n);
  for (int a = 0; a < n; ++a) t->frob[a] = static_cast<Elem>(a);
  for (int i = 1; i < e; ++i) {
    for (int a = 0; a < n; ++a) {
      // x^(p^i) = (x^(p^(i-1)))^p
      Elem x = t->frob[(i - 1) * n + a];
      Elem y = 1;
      for (int j = 0; j < p; ++j) y = t->mul[y * n + x];
      t->frob[i * n + a] = y;
    }
  }
  return Field(std::move(t));
}

Field Field::of_order(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    int e = 0;
    int m = q;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (m != 1) break;
    return make(p, e);
  }
  throw std::invalid_argument("field: " + std::to_string(q) + " is not a prime power");
}

int Field::characteristic() const { return t_->p; }
int Field::degree() const { return t_->e; }
int Field::order() const { return t_->q; }
const std::vector<int>& Field::modulus() const { return t_->modulus; }

#define WIDTHLAB_CHECK(a)                                                                \
  do {                                                                                   \
    if ((a) >= t_->q) throw std::out_of_range("field: element value out of range");     \
  } while (0)

Elem Field::add(Elem a, Elem b) const {
  WIDTHLAB_CHECK(a);
  WIDTHLAB_CHECK(b);
  return t_->add[a * t_->q + b];
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  WIDTHLAB_CHECK(a);
  WIDTHLAB_CHECK(b);
  return t_->mul[a * t_->q + b];
}

Elem Field::neg(Elem a) const {
  WIDTHLAB_CHECK(a);
  return t_->neg[a];
}

Elem Field::inv(Elem a) const {
  WIDTHLAB_CHECK(a);
  if (a == 0) throw std::domain_error("field: inverse of zero");
  return t_->inv[a];
}

Elem Field::pow(Elem a, long long k) const {
  WIDTHLAB_CHECK(a);
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = 1;
  Elem base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

Elem Field::frobenius(Elem a, int i) const {
  WIDTHLAB_CHECK(a);
  if (i < 0 || i >= t_->e) throw std::out_of_range("field: frobenius power out of range");
  return t_->frob[i * t_->q + a];
}

#undef WIDTHLAB_CHECK

bool Field::operator==(const Field& o) const {
  if (t_ == o.t_) return true;
  return t_->p == o.t_->p && t_->e == o.t_->e && t_->modulus == o.t_->modulus;
}

std::string Field::name() const { return "GF(" + std::to_string(t_->q) + ")"; }

}  // namespace widthlab
