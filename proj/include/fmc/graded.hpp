#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fmc/cyclotomic.hpp"
#include "fmc/grading.hpp"

namespace fmc {

/// Coefficient vector over a fixed basis. Knows its field so that zero-length
/// elements still carry a context.
class Element {
 public:
  Element(std::size_t dim, const CyclotomicField& field);
  static Element basis(std::size_t dim, std::size_t i, const CyclotomicField& field);

  std::size_t size() const noexcept { return c_.size(); }
  const CyclotomicField& field() const noexcept { return *field_; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Scalar& s);
  Element operator-() const;
  /// this += s * t
  Element& add_scaled(const Element& t, const Scalar& s);
  /// this += (negate ? -1 : 1) * z^e * t, with fast paths for e == 0 and z^e == -1.
  Element& add_root_scaled(const Element& t, long long e, bool negate);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b);

  /// `[lit, lit, ...]` with canonical scalar literals.
  std::string str() const;

 private:
  void require_compatible(const Element& other) const;

  const CyclotomicField* field_;
  std::vector<Scalar> c_;
};

/// Graded vector space with a fixed basis; basis vector i has degree degrees[i].
class GradedModule {
 public:
  /// Throws GradingError if a degree is not an element of the group.
  GradedModule(GradingPtr grading, std::vector<GroupElement> degrees);

  std::size_t dim() const noexcept { return degrees_.size(); }
  const GroupElement& degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<GroupElement>& degrees() const noexcept { return degrees_; }
  const Grading& grading() const noexcept { return *grading_; }
  const GradingPtr& grading_ptr() const noexcept { return grading_; }
  const CyclotomicField& field() const noexcept { return grading_->field(); }

  Element zero() const { return Element(dim(), field()); }
  Element basis(std::size_t i) const;

  /// Degree of a homogeneous element; the zero element has degree 0.
  /// nullopt when the support spans several degrees.
  std::optional<GroupElement> degree_of(const Element& x) const;
  /// As degree_of, but throws NonHomogeneous.
  GroupElement homogeneous_degree(const Element& x) const;

  /// Same grading (by value) and the same degree list.
  friend bool operator==(const GradedModule& a, const GradedModule& b);

 private:
  GradingPtr grading_;
  std::vector<GroupElement> degrees_;
};

/// A homogeneous element together with its degree.
struct Hom {
  Element value;
  GroupElement degree;
};

/// Sparse 3-index table: cell (i, j) holds the nonzero terms (k, c).
class StructureTensor {
 public:
  struct Term {
    std::size_t index;
    Scalar coeff;
  };
  struct Entry {
    std::size_t i, j, k;
    Scalar coeff;
  };

  StructureTensor(std::size_t left, std::size_t right, std::size_t out);

  std::size_t left() const noexcept { return left_; }
  std::size_t right() const noexcept { return right_; }
  std::size_t out() const noexcept { return out_; }

  /// Adds c to entry (i, j, k); entries that cancel to zero are dropped.
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  const std::vector<Term>& cell(std::size_t i, std::size_t j) const { return cells_[i * right_ + j]; }
  std::size_t nnz() const noexcept;
  /// All nonzero entries sorted by (i, j, k).
  std::vector<Entry> entries() const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b);

 private:
  std::size_t left_, right_, out_;
  std::vector<std::vector<Term>> cells_;
};

/// Bilinear product m : A x A -> A given by structure constants
/// m(b_i, b_j) = sum_k c_ijk b_k, with c_ijk != 0 only when deg k = deg i + deg j.
class BilinearMap {
 public:
  using Entry = StructureTensor::Entry;

  /// Throws IndexError / GradingError on bad entries. Repeated (i, j, k) entries add up.
  BilinearMap(std::string name, GradedModule module, const std::vector<Entry>& entries = {});

  const std::string& name() const noexcept { return name_; }
  void rename(std::string name) { name_ = std::move(name); }
  const GradedModule& module() const noexcept { return module_; }
  const StructureTensor& tensor() const noexcept { return t_; }
  std::vector<Entry> entries() const { return t_.entries(); }
  bool is_zero() const noexcept { return t_.nnz() == 0; }

  /// m(b_i, b_j).
  Element entry(std::size_t i, std::size_t j) const;
  /// sum_{i,j} x_i y_j m(b_i, b_j).
  Element apply(const Element& x, const Element& y) const;

  friend bool operator==(const BilinearMap& a, const BilinearMap& b) {
    return a.module_ == b.module_ && a.t_ == b.t_;
  }

 private:
  std::string name_;
  GradedModule module_;
  StructureTensor t_;
};

Element apply(const BilinearMap& m, const Element& x, const Element& y);

/// Dense matrix of scalars, used for operators on a carrier space.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const CyclotomicField& field);
  static Matrix identity(std::size_t n, const CyclotomicField& field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const CyclotomicField& field() const noexcept { return *field_; }

  bool is_zero() const noexcept;
  Element apply(const Element& v) const;
  Element column(std::size_t c) const;
  void set_column(std::size_t c, const Element& v);

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix transpose() const;
  /// Exact determinant by Gaussian elimination over Q(z_N).
  Scalar determinant() const;
  /// A nonzero vector v with M v = 0, or nullopt when M is invertible.
  std::optional<Element> kernel_vector() const;

 private:
  std::size_t rows_, cols_;
  const CyclotomicField* field_;
  std::vector<Scalar> a_;
};

/// Linear map A -> gl(V), stored as a sparse tensor: action(b_i) v_col = sum_row c v_row.
/// Grading: action(b_i) maps V_b into V_{deg i + b}.
class Representation {
 public:
  struct Entry {
    std::size_t i, row, col;
    Scalar coeff;
  };

  /// `self_carrier` marks V = A (serialised as "self").
  Representation(std::string name, GradedModule algebra, GradedModule carrier, bool self_carrier,
                 const std::vector<Entry>& entries = {});
  /// Carrier is the algebra itself.
  static Representation on_self(std::string name, const GradedModule& algebra, const std::vector<Entry>& entries = {});

  const std::string& name() const noexcept { return name_; }
  void rename(std::string name) { name_ = std::move(name); }
  const GradedModule& algebra() const noexcept { return algebra_; }
  const GradedModule& carrier() const noexcept { return carrier_; }
  bool self_carrier() const noexcept { return self_carrier_; }
  const StructureTensor& tensor() const noexcept { return t_; }
  std::vector<Entry> entries() const;
  bool is_zero() const noexcept { return t_.nnz() == 0; }

  /// action(b_i) v.
  Element act_basis(std::size_t i, const Element& v) const;
  /// action(x) v for arbitrary x.
  Element act(const Element& x, const Element& v) const;
  Matrix matrix(const Element& x) const;
  Matrix matrix_basis(std::size_t i) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.algebra_ == b.algebra_ && a.carrier_ == b.carrier_ && a.t_ == b.t_;
  }

 private:
  std::string name_;
  GradedModule algebra_;
  GradedModule carrier_;
  bool self_carrier_;
  StructureTensor t_;
};

/// Representation triple (V, rho, mu) over a common carrier.
struct FmRepresentation {
  Representation rho;
  Representation mu;
};

/// Bilinear form B(b_i, b_j) = matrix(i, j). No symmetry or grading is imposed.
class BilinearForm {
 public:
  BilinearForm(std::string name, GradedModule module, Matrix matrix);
  struct Entry {
    std::size_t i, j;
    Scalar coeff;
  };
  BilinearForm(std::string name, GradedModule module, const std::vector<Entry>& entries);

  const std::string& name() const noexcept { return name_; }
  const GradedModule& module() const noexcept { return module_; }
  const Matrix& matrix() const noexcept { return m_; }
  const Scalar& value(std::size_t i, std::size_t j) const { return m_(i, j); }
  Scalar eval(const Element& x, const Element& y) const;

 private:
  std::string name_;
  GradedModule module_;
  Matrix m_;
};

/// An algebra together with its named products, representations and forms.
/// Conventional product names: dot, bracket, zinbiel, prelie.
/// A representation triple named R is stored as representations "R.rho" and "R.mu".
struct AlgebraSpec {
  explicit AlgebraSpec(GradedModule m) : module(std::move(m)) {}

  GradedModule module;
  std::map<std::string, BilinearMap> products;
  std::map<std::string, Representation> representations;
  std::map<std::string, BilinearForm> forms;

  const Grading& grading() const noexcept { return module.grading(); }
  const CyclotomicField& field() const noexcept { return module.field(); }

  bool has_product(const std::string& name) const { return products.count(name) != 0; }
  /// Throws MissingInput.
  const BilinearMap& product(const std::string& name) const;
  const Representation& representation(const std::string& name) const;
  const BilinearForm& form(const std::string& name) const;

  /// Inserts or replaces; throws ContextMismatch if the object lives on another module.
  void set_product(BilinearMap m);
  void set_representation(Representation r);
  void set_form(BilinearForm f);

  /// Looks up "name.rho" / "name.mu".
  FmRepresentation fm_representation(const std::string& name) const;
  /// Stores the pair as "name.rho" / "name.mu".
  void set_fm_representation(const std::string& name, FmRepresentation rep);
  /// Base names R for which both R.rho and R.mu exist.
  std::vector<std::string> fm_representation_names() const;
};

}  // namespace fmc
