#include "toricsys/lattice.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <sstream>

namespace toricsys {

namespace checked {

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("integer overflow in addition");
  return r;
}

Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw InternalError("integer overflow in subtraction");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("integer overflow in multiplication");
  return r;
}

}  // namespace checked

PicardLattice::PicardLattice(std::string id, std::vector<std::string> basis_labels,
                             std::vector<Int> gram, std::vector<Int> canonical,
                             int blowup_points)
    : id_(std::move(id)),
      labels_(std::move(basis_labels)),
      gram_(std::move(gram)),
      canonical_(std::move(canonical)),
      blowup_points_(blowup_points) {
  const std::size_t r = labels_.size();
  if (r == 0 || r > kMaxRank) throw DomainError("lattice rank out of range: " + std::to_string(r));
  if (gram_.size() != r * r) throw DomainError("gram matrix has wrong size");
  if (canonical_.size() != r) throw DomainError("canonical class has wrong length");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i * r + j] != gram_[j * r + i]) throw DomainError("gram matrix is not symmetric");
  degree_ = pair(canonical_, canonical_);
}

Int PicardLattice::pair(std::span<const Int> a, std::span<const Int> b) const {
  const std::size_t r = rank();
  Int total = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < r; ++j) {
      const Int g = gram_[i * r + j];
      if (g != 0 && b[j] != 0) row = checked::add(row, checked::mul(g, b[j]));
    }
    total = checked::add(total, checked::mul(a[i], row));
  }
  return total;
}

Int PicardLattice::determinant() const {
  // Bareiss fraction-free elimination; exact for integer matrices.
  const std::size_t r = rank();
  std::vector<Int> m(gram_);
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k < r; ++k) {
    if (m[k * r + k] == 0) {
      std::size_t p = k + 1;
      while (p < r && m[p * r + k] == 0) ++p;
      if (p == r) return 0;
      for (std::size_t j = 0; j < r; ++j) std::swap(m[k * r + j], m[p * r + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < r; ++i) {
      for (std::size_t j = k + 1; j < r; ++j) {
        const Int num = checked::sub(checked::mul(m[i * r + j], m[k * r + k]),
                                     checked::mul(m[i * r + k], m[k * r + j]));
        m[i * r + j] = num / prev;
      }
    }
    prev = m[k * r + k];
  }
  return sign * m[(r - 1) * r + (r - 1)];
}

DivisorClass PicardLattice::zero() const { return make(std::vector<Int>(rank(), 0)); }

DivisorClass PicardLattice::basis(std::size_t i) const {
  if (i >= rank()) throw DomainError("basis index out of range");
  std::vector<Int> c(rank(), 0);
  c[i] = 1;
  return make(std::move(c));
}

DivisorClass PicardLattice::canonical() const {
  return make(std::vector<Int>(canonical_.begin(), canonical_.end()));
}

DivisorClass PicardLattice::make(std::vector<Int> coords) const {
  return DivisorClass(shared_from_this(), std::move(coords));
}

LatticePtr make_blowup_lattice(int n) {
  if (n < 0 || n > 8) throw DomainError("blow-up lattice needs 0 <= n <= 8, got " + std::to_string(n));
  static std::array<LatticePtr, 9> cache;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int k = 0; k <= 8; ++k) {
      const std::size_t r = static_cast<std::size_t>(k) + 1;
      std::vector<std::string> labels{"L"};
      std::vector<Int> gram(r * r, 0);
      std::vector<Int> canonical(r, 1);
      gram[0] = 1;
      canonical[0] = -3;
      for (std::size_t i = 1; i < r; ++i) {
        labels.push_back("E" + std::to_string(i));
        gram[i * r + i] = -1;
      }
      std::string id = k == 0 ? "P2" : "Bl" + std::to_string(k);
      cache[static_cast<std::size_t>(k)] = std::make_shared<const PicardLattice>(
          std::move(id), std::move(labels), std::move(gram), std::move(canonical), k);
    }
  });
  return cache[static_cast<std::size_t>(n)];
}

LatticePtr make_hirzebruch_lattice(HirzebruchKind kind) {
  static const LatticePtr f0 = std::make_shared<const PicardLattice>(
      "F0", std::vector<std::string>{"H1", "H2"}, std::vector<Int>{0, 1, 1, 0},
      std::vector<Int>{-2, -2});
  // F.S = 1, not 0: with F.S = 0 the system (F, S-F, F, S-F) would have
  // adjacent products 0 and K = -2S would not square to 8.
  static const LatticePtr f2 = std::make_shared<const PicardLattice>(
      "F2", std::vector<std::string>{"F", "S"}, std::vector<Int>{0, 1, 1, 2},
      std::vector<Int>{0, -2});
  return kind == HirzebruchKind::F0 ? f0 : f2;
}

LatticePtr lattice_by_id(const std::string& id) {
  if (id == "P2") return make_blowup_lattice(0);
  if (id == "F0") return make_hirzebruch_lattice(HirzebruchKind::F0);
  if (id == "F2") return make_hirzebruch_lattice(HirzebruchKind::F2);
  if (id.size() == 3 && id.starts_with("Bl") && id[2] >= '0' && id[2] <= '8')
    return make_blowup_lattice(id[2] - '0');
  throw DomainError("unknown lattice id: " + id);
}

DivisorClass::DivisorClass(LatticePtr lattice, std::vector<Int> coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_) throw DomainError("divisor class without a lattice");
  if (coords_.size() != lattice_->rank())
    throw DomainError("coordinate vector of length " + std::to_string(coords_.size()) +
                      " in lattice " + lattice_->id() + " of rank " +
                      std::to_string(lattice_->rank()));
}

bool DivisorClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

void require_same_lattice(const DivisorClass& a, const DivisorClass& b) {
  if (a.lattice() != b.lattice() && a.lattice()->id() != b.lattice()->id())
    throw DomainError("lattice mismatch: " + a.lattice()->id() + " vs " + b.lattice()->id());
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same_lattice(*this, other);
  std::vector<Int> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::add(coords_[i], other.coords_[i]);
  return DivisorClass(lattice_, std::move(c));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  require_same_lattice(*this, other);
  std::vector<Int> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::sub(coords_[i], other.coords_[i]);
  return DivisorClass(lattice_, std::move(c));
}

DivisorClass DivisorClass::operator-() const { return *this * -1; }

DivisorClass DivisorClass::operator*(Int k) const {
  std::vector<Int> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::mul(coords_[i], k);
  return DivisorClass(lattice_, std::move(c));
}

bool DivisorClass::operator==(const DivisorClass& other) const {
  return lattice_->id() == other.lattice_->id() && coords_ == other.coords_;
}

std::strong_ordering DivisorClass::operator<=>(const DivisorClass& other) const {
  if (auto c = lattice_->id() <=> other.lattice_->id(); c != 0) return c;
  return coords_ <=> other.coords_;
}

std::string DivisorClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  const auto& labels = lattice_->basis_labels();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Int c = coords_[i];
    if (c == 0) continue;
    if (c < 0) out << '-';
    else if (!first) out << '+';
    if (c != 1 && c != -1) out << (c < 0 ? -c : c);
    out << labels[i];
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

Int intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a, b);
  return a.lattice()->pair(a.coords(), b.coords());
}

Int euler_char(const DivisorClass& d) {
  const auto& lat = *d.lattice();
  const Int dd = lat.pair(d.coords(), d.coords());
  const Int dk = lat.pair(d.coords(), lat.canonical_coords());
  const Int twice = checked::sub(dd, dk);
  if (twice % 2 != 0)
    throw InternalError("D.(D-K) is odd for " + d.to_string() + " in " + lat.id() +
                        "; the lattice is not a surface lattice");
  return 1 + twice / 2;
}

Int euler_char_pair(const DivisorClass& d1, const DivisorClass& d2) {
  return euler_char(d2 - d1);
}

bool is_numerically_lo(const DivisorClass& d) {
  const auto& lat = *d.lattice();
  const Int dd = lat.pair(d.coords(), d.coords());
  const Int dk = lat.pair(d.coords(), lat.canonical_coords());
  const bool by_form = checked::add(dd, dk) == -2;
  const bool by_chi = euler_char(-d) == 0;
  if (by_form != by_chi)
    throw InternalError("numerical left-orthogonality criteria disagree for " + d.to_string());
  return by_form;
}

DivisorClass add(const DivisorClass& a, const DivisorClass& b) { return a + b; }
DivisorClass negate(const DivisorClass& d) { return -d; }
DivisorClass scale(const DivisorClass& d, Int c) { return d * c; }

std::size_t DivisorClassHash::operator()(const DivisorClass& d) const noexcept {
  std::size_t h = std::hash<std::string>{}(d.lattice()->id());
  for (Int c : d.coords()) h = h * 1000003u ^ std::hash<Int>{}(c);
  return h;
}

}  // namespace toricsys
