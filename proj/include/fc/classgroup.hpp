#ifndef FC_CLASSGROUP_HPP
#define FC_CLASSGROUP_HPP

// Form class groups of imaginary quadratic fields: reduced positive
// definite binary quadratic forms under Gauss composition, the group
// structure as a product of cyclic factors, the character group with
// exact root-of-unity values, prime ideal classes, and the Hecke
// theta coefficients attached to a class group character.

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace fc {

struct BQF {
  int64_t a = 0, b = 0, c = 0;

  int64_t disc() const { return b * b - 4 * a * c; }
  bool operator==(const BQF& o) const = default;
  bool operator<(const BQF& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
  // |b| <= a <= c, with b >= 0 when |b| = a or a = c.
  bool is_reduced() const;
  // Reduced representative of the proper equivalence class.
  BQF reduced() const;
  int64_t eval(int64_t x, int64_t y) const {
    return a * x * x + b * x * y + c * y * y;
  }
};

// An exact angle q/n meaning the root of unity exp(2*pi*i*q/n),
// stored in lowest terms with 0 <= q < n.
struct Angle {
  int64_t num = 0, den = 1;
  std::complex<double> value() const;
};

class ClassGroup {
 public:
  int64_t d = 0;               // fundamental discriminant, d < 0
  int unit_count = 2;          // number of units w(K): 6, 4 or 2
  std::vector<BQF> forms;      // reduced reps; forms[0] is principal
  std::vector<int> inv;        // inv[i]: index of the inverse class
  std::vector<int64_t> cyclic_orders;  // d1 | d2 | ... | dr
  std::vector<int> generators;         // class index per cyclic factor
  std::vector<std::vector<int64_t>> coords;  // coords[i][j] mod d_j

  int h() const { return static_cast<int>(forms.size()); }
  int compose(int i, int j) const { return table_[i][j]; }
  int power(int i, int64_t e) const;
  int index_of(const BQF& f) const;  // throws if not one of our forms

 private:
  friend ClassGroup class_group(int64_t d);
  std::vector<std::vector<int>> table_;
  std::map<BQF, int> index_;
};

ClassGroup class_group(int64_t d);

// Dirichlet composition of two primitive forms of the same negative
// discriminant; returns the reduced composite. Exposed for testing.
BQF compose_forms(const BQF& f1, const BQF& f2);

class Character {
 public:
  Character(const ClassGroup& G, std::vector<int64_t> t);
  Angle angle(int cls) const;  // value on class index
  std::complex<double> value(int cls) const { return angle(cls).value(); }
  bool is_trivial() const;
  int64_t order() const;
  Character squared() const;
  Character conjugate() const;
  const std::vector<int64_t>& exponents() const { return t_; }
  const ClassGroup& group() const { return *G_; }

 private:
  const ClassGroup* G_;
  std::vector<int64_t> t_;
};

// All h characters; the first is the trivial character.
std::vector<Character> characters(const ClassGroup& G);

enum class SplitType { split, inert, ramified };

struct PrimeIdealClass {
  SplitType type = SplitType::inert;
  int cls = 0;      // class index of the prime ideal above p (split/ramified)
  int64_t bp = 0;   // chosen b with b^2 ≡ d (mod 4p)
};

PrimeIdealClass prime_ideal_class(const ClassGroup& G, int64_t p);

// r_Lambda(n) for n = 1..X: sum of chi over integral ideals of norm n.
std::vector<std::complex<double>> theta_coeffs(const ClassGroup& G,
                                               const Character& chi,
                                               int64_t X);

// Satake parameters of the local component at p of the theta series
// attached to chi: split {chi(P), chi(Pbar)}, inert {1, -1},
// ramified {chi(P), 0}.
struct AIParams {
  std::complex<double> alpha, beta;
  SplitType type;
};

AIParams ai_satake(const ClassGroup& G, const Character& chi, int64_t p);

}  // namespace fc

#endif
