#include "fmc/graded.hpp"

#include <algorithm>

#include "fmc/errors.hpp"

namespace fmc {

namespace {

std::string degree_str(const GroupElement& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.rank(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Element

Element::Element(std::size_t dim, const CyclotomicField& field) : field_(&field), c_(dim, field.zero()) {}

Element Element::basis(std::size_t dim, std::size_t i, const CyclotomicField& field) {
  Element e(dim, field);
  e.c_.at(i) = field.one();
  return e;
}

bool Element::is_zero() const noexcept {
  for (const auto& s : c_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

void Element::require_compatible(const Element& other) const {
  if (field_ != other.field_) throw ContextMismatch("elements over different scalar fields");
  if (c_.size() != other.c_.size()) {
    throw ContextMismatch("element dimensions differ: " + std::to_string(c_.size()) + " vs " +
                          std::to_string(other.c_.size()));
  }
}

Element& Element::operator+=(const Element& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!rhs.c_[i].is_zero()) c_[i] += rhs.c_[i];
  }
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!rhs.c_[i].is_zero()) c_[i] -= rhs.c_[i];
  }
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  for (auto& c : c_) {
    if (!c.is_zero()) c = c * s;
  }
  return *this;
}

Element Element::operator-() const {
  Element r(*this);
  for (auto& c : r.c_) {
    if (!c.is_zero()) c = -c;
  }
  return r;
}

Element& Element::add_scaled(const Element& t, const Scalar& s) {
  require_compatible(t);
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!t.c_[i].is_zero()) c_[i].add_product(s, t.c_[i]);
  }
  return *this;
}

Element& Element::add_root_scaled(const Element& t, long long e, bool negate) {
  const int n = field_->order();
  e %= n;
  if (e < 0) e += n;
  if (e == 0) return negate ? (*this -= t) : (*this += t);
  if (2 * e == n) return negate ? (*this += t) : (*this -= t);
  const Scalar& r = field_->root(e);
  return add_scaled(t, negate ? -r : r);
}

bool operator==(const Element& a, const Element& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

std::string Element::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ", " : "") + c_[i].str();
  return s + "]";
}

// ---------------------------------------------------------------------------
// GradedModule

GradedModule::GradedModule(GradingPtr grading, std::vector<GroupElement> degrees)
    : grading_(std::move(grading)), degrees_(std::move(degrees)) {
  if (!grading_) throw InvalidArgument("graded module needs a grading");
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (!grading_->group().contains(degrees_[i])) {
      throw GradingError("degree " + degree_str(degrees_[i]) + " of basis vector " + std::to_string(i) +
                         " is not a reduced element of the grading group");
    }
  }
}

Element GradedModule::basis(std::size_t i) const {
  if (i >= dim()) throw IndexError("basis index " + std::to_string(i) + " out of range");
  return Element::basis(dim(), i, field());
}

std::optional<GroupElement> GradedModule::degree_of(const Element& x) const {
  if (x.size() != dim()) throw ContextMismatch("element dimension does not match module");
  std::optional<GroupElement> deg;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    if (!deg) {
      deg = degrees_[i];
    } else if (!(*deg == degrees_[i])) {
      return std::nullopt;
    }
  }
  if (!deg) return grading_->group().zero();
  return deg;
}

GroupElement GradedModule::homogeneous_degree(const Element& x) const {
  auto d = degree_of(x);
  if (!d) throw NonHomogeneous("element " + x.str() + " is not homogeneous");
  return *d;
}

bool operator==(const GradedModule& a, const GradedModule& b) {
  if (a.degrees_ != b.degrees_) return false;
  return a.grading_ == b.grading_ || *a.grading_ == *b.grading_;
}

// ---------------------------------------------------------------------------
// StructureTensor

StructureTensor::StructureTensor(std::size_t left, std::size_t right, std::size_t out)
    : left_(left), right_(right), out_(out), cells_(left * right) {}

void StructureTensor::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (c.is_zero()) return;
  auto& cell = cells_[i * right_ + j];
  auto it = std::lower_bound(cell.begin(), cell.end(), k, [](const Term& t, std::size_t key) { return t.index < key; });
  if (it != cell.end() && it->index == k) {
    it->coeff += c;
    if (it->coeff.is_zero()) cell.erase(it);
  } else {
    cell.insert(it, Term{k, c});
  }
}

std::size_t StructureTensor::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& cell : cells_) n += cell.size();
  return n;
}

std::vector<StructureTensor::Entry> StructureTensor::entries() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < left_; ++i) {
    for (std::size_t j = 0; j < right_; ++j) {
      for (const auto& t : cell(i, j)) out.push_back(Entry{i, j, t.index, t.coeff});
    }
  }
  return out;
}

bool operator==(const StructureTensor& a, const StructureTensor& b) {
  if (a.left_ != b.left_ || a.right_ != b.right_ || a.out_ != b.out_) return false;
  for (std::size_t c = 0; c < a.cells_.size(); ++c) {
    const auto& x = a.cells_[c];
    const auto& y = b.cells_[c];
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (x[t].index != y[t].index || !(x[t].coeff == y[t].coeff)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// BilinearMap

BilinearMap::BilinearMap(std::string name, GradedModule module, const std::vector<Entry>& entries)
    : name_(std::move(name)), module_(std::move(module)), t_(module_.dim(), module_.dim(), module_.dim()) {
  const std::size_t n = module_.dim();
  const Grading& g = module_.grading();
  for (const auto& e : entries) {
    if (e.i >= n || e.j >= n || e.k >= n) {
      throw IndexError("product '" + name_ + "' entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                       std::to_string(e.k) + ") out of range for dimension " + std::to_string(n));
    }
    if (&e.coeff.field() != &module_.field()) throw ContextMismatch("product '" + name_ + "' coefficient field");
    if (e.coeff.is_zero()) continue;
    if (!(g.add(module_.degree(e.i), module_.degree(e.j)) == module_.degree(e.k))) {
      throw GradingError("product '" + name_ + "' entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                         std::to_string(e.k) + ") violates grading: deg " + degree_str(module_.degree(e.i)) + " + " +
                         degree_str(module_.degree(e.j)) + " != " + degree_str(module_.degree(e.k)));
    }
    t_.add(e.i, e.j, e.k, e.coeff);
  }
}

Element BilinearMap::entry(std::size_t i, std::size_t j) const {
  Element out = module_.zero();
  for (const auto& t : t_.cell(i, j)) out[t.index] = t.coeff;
  return out;
}

Element BilinearMap::apply(const Element& x, const Element& y) const {
  const std::size_t n = module_.dim();
  if (x.size() != n || y.size() != n) throw ContextMismatch("product '" + name_ + "' applied to wrong dimension");
  if (&x.field() != &module_.field() || &y.field() != &module_.field()) {
    throw ContextMismatch("product '" + name_ + "' applied across scalar fields");
  }
  Element out = module_.zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto& cell = t_.cell(i, j);
      if (cell.empty()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& t : cell) out[t.index].add_product(xy, t.coeff);
    }
  }
  return out;
}

Element apply(const BilinearMap& m, const Element& x, const Element& y) { return m.apply(x, y); }

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, const CyclotomicField& field)
    : rows_(rows), cols_(cols), field_(&field), a_(rows * cols, field.zero()) {}

Matrix Matrix::identity(std::size_t n, const CyclotomicField& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

bool Matrix::is_zero() const noexcept {
  for (const auto& s : a_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Element Matrix::apply(const Element& v) const {
  if (v.size() != cols_) throw ContextMismatch("matrix/vector dimension mismatch");
  Element out(rows_, *field_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& m = (*this)(r, c);
      if (!m.is_zero()) out[r].add_product(m, v[c]);
    }
  }
  return out;
}

Element Matrix::column(std::size_t c) const {
  Element out(rows_, *field_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::set_column(std::size_t c, const Element& v) {
  if (v.size() != rows_) throw ContextMismatch("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ContextMismatch("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ContextMismatch("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : a_) x = x * s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ContextMismatch("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_, *a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j).add_product(x, b(k, j));
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.a_ == b.a_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, *field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw ContextMismatch("determinant of a non-square matrix");
  Matrix m(*this);
  Scalar det = field_->one();
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return field_->zero();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det = det * m(col, col);
    const Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar f = -(m(r, col) * inv);
      for (std::size_t c = col; c < n; ++c) m(r, c).add_product(f, m(col, c));
    }
  }
  return det;
}

std::optional<Element> Matrix::kernel_vector() const {
  // Reduced row echelon form; the first free column yields a kernel vector.
  Matrix m(*this);
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && m(p, col).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != row) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(p, c), m(row, c));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = 0; c < cols_; ++c) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = -m(r, col);
      for (std::size_t c = 0; c < cols_; ++c) m(r, c).add_product(f, m(row, c));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t free = 0; free < cols_; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    Element v(cols_, *field_);
    v[free] = field_->one();
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m(r, free);
    return v;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Representation

Representation::Representation(std::string name, GradedModule algebra, GradedModule carrier, bool self_carrier,
                               const std::vector<Entry>& entries)
    : name_(std::move(name)),
      algebra_(std::move(algebra)),
      carrier_(std::move(carrier)),
      self_carrier_(self_carrier),
      t_(algebra_.dim(), carrier_.dim(), carrier_.dim()) {
  if (!(algebra_.grading() == carrier_.grading())) {
    throw ContextMismatch("representation '" + name_ + "': carrier uses a different grading");
  }
  if (self_carrier_ && !(algebra_ == carrier_)) {
    throw ContextMismatch("representation '" + name_ + "' marked self but carrier differs from algebra");
  }
  const Grading& g = algebra_.grading();
  const std::size_t n = algebra_.dim();
  const std::size_t m = carrier_.dim();
  for (const auto& e : entries) {
    if (e.i >= n || e.row >= m || e.col >= m) {
      throw IndexError("representation '" + name_ + "' entry (" + std::to_string(e.i) + "," + std::to_string(e.row) +
                       "," + std::to_string(e.col) + ") out of range");
    }
    if (&e.coeff.field() != &algebra_.field()) throw ContextMismatch("representation '" + name_ + "' coefficient field");
    if (e.coeff.is_zero()) continue;
    if (!(g.add(algebra_.degree(e.i), carrier_.degree(e.col)) == carrier_.degree(e.row))) {
      throw GradingError("representation '" + name_ + "' entry (" + std::to_string(e.i) + "," +
                         std::to_string(e.row) + "," + std::to_string(e.col) + ") violates grading");
    }
    t_.add(e.i, e.col, e.row, e.coeff);
  }
}

Representation Representation::on_self(std::string name, const GradedModule& algebra,
                                       const std::vector<Entry>& entries) {
  return Representation(std::move(name), algebra, algebra, true, entries);
}

std::vector<Representation::Entry> Representation::entries() const {
  std::vector<Entry> out;
  for (const auto& e : t_.entries()) out.push_back(Entry{e.i, e.k, e.j, e.coeff});
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.i, a.row, a.col) < std::tie(b.i, b.row, b.col);
  });
  return out;
}

Element Representation::act_basis(std::size_t i, const Element& v) const {
  const std::size_t m = carrier_.dim();
  if (v.size() != m) throw ContextMismatch("representation '" + name_ + "' applied to wrong dimension");
  Element out = carrier_.zero();
  for (std::size_t col = 0; col < m; ++col) {
    if (v[col].is_zero()) continue;
    for (const auto& t : t_.cell(i, col)) out[t.index].add_product(t.coeff, v[col]);
  }
  return out;
}

Element Representation::act(const Element& x, const Element& v) const {
  if (x.size() != algebra_.dim()) throw ContextMismatch("representation '" + name_ + "' algebra dimension");
  Element out = carrier_.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    out.add_scaled(act_basis(i, v), x[i]);
  }
  return out;
}

Matrix Representation::matrix_basis(std::size_t i) const {
  const std::size_t m = carrier_.dim();
  Matrix out(m, m, carrier_.field());
  for (std::size_t col = 0; col < m; ++col) {
    for (const auto& t : t_.cell(i, col)) out(t.index, col) = t.coeff;
  }
  return out;
}

Matrix Representation::matrix(const Element& x) const {
  const std::size_t m = carrier_.dim();
  Matrix out(m, m, carrier_.field());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    out += x[i] * matrix_basis(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// BilinearForm

BilinearForm::BilinearForm(std::string name, GradedModule module, Matrix matrix)
    : name_(std::move(name)), module_(std::move(module)), m_(std::move(matrix)) {
  if (m_.rows() != module_.dim() || m_.cols() != module_.dim()) {
    throw ContextMismatch("form '" + name_ + "' matrix shape does not match module dimension");
  }
}

BilinearForm::BilinearForm(std::string name, GradedModule module, const std::vector<Entry>& entries)
    : name_(std::move(name)), module_(std::move(module)), m_(module_.dim(), module_.dim(), module_.field()) {
  for (const auto& e : entries) {
    if (e.i >= module_.dim() || e.j >= module_.dim()) {
      throw IndexError("form '" + name_ + "' entry (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                       ") out of range");
    }
    m_(e.i, e.j) += e.coeff;
  }
}

Scalar BilinearForm::eval(const Element& x, const Element& y) const {
  Scalar acc = module_.field().zero();
  const std::size_t n = module_.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || m_(i, j).is_zero()) continue;
      acc.add_product(x[i] * y[j], m_(i, j));
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// AlgebraSpec

const BilinearMap& AlgebraSpec::product(const std::string& name) const {
  auto it = products.find(name);
  if (it == products.end()) throw MissingInput("algebra has no product '" + name + "'");
  return it->second;
}

const Representation& AlgebraSpec::representation(const std::string& name) const {
  auto it = representations.find(name);
  if (it == representations.end()) throw MissingInput("algebra has no representation '" + name + "'");
  return it->second;
}

const BilinearForm& AlgebraSpec::form(const std::string& name) const {
  auto it = forms.find(name);
  if (it == forms.end()) throw MissingInput("algebra has no form '" + name + "'");
  return it->second;
}

void AlgebraSpec::set_product(BilinearMap m) {
  if (!(m.module() == module)) throw ContextMismatch("product '" + m.name() + "' lives on another module");
  std::string key = m.name();
  products.insert_or_assign(std::move(key), std::move(m));
}

void AlgebraSpec::set_representation(Representation r) {
  if (!(r.algebra() == module)) throw ContextMismatch("representation '" + r.name() + "' acts on another algebra");
  std::string key = r.name();
  representations.insert_or_assign(std::move(key), std::move(r));
}

void AlgebraSpec::set_form(BilinearForm f) {
  if (!(f.module() == module)) throw ContextMismatch("form '" + f.name() + "' lives on another module");
  std::string key = f.name();
  forms.insert_or_assign(std::move(key), std::move(f));
}

FmRepresentation AlgebraSpec::fm_representation(const std::string& name) const {
  return FmRepresentation{representation(name + ".rho"), representation(name + ".mu")};
}

void AlgebraSpec::set_fm_representation(const std::string& name, FmRepresentation rep) {
  if (!(rep.rho.carrier() == rep.mu.carrier())) {
    throw ContextMismatch("representation pair '" + name + "' has different carriers");
  }
  rep.rho.rename(name + ".rho");
  rep.mu.rename(name + ".mu");
  set_representation(std::move(rep.rho));
  set_representation(std::move(rep.mu));
}

std::vector<std::string> AlgebraSpec::fm_representation_names() const {
  std::vector<std::string> out;
  const std::string suffix = ".rho";
  for (const auto& [name, rep] : representations) {
    if (name.size() <= suffix.size() || name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) {
      continue;
    }
    std::string base = name.substr(0, name.size() - suffix.size());
    if (representations.count(base + ".mu")) out.push_back(base);
  }
  return out;
}

}  // namespace fmc
