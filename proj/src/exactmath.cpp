#include "zonodeep/exactmath.hpp"

#include <cstdlib>
#include <sstream>

namespace zonodeep {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorKind::Domain, "rational denominator must be nonzero");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool valid_rat_text(const std::string& s) {
  std::size_t i = 0;
  auto digits = [&](std::size_t* pos) {
    std::size_t start = *pos;
    while (*pos < s.size() && s[*pos] >= '0' && s[*pos] <= '9') ++*pos;
    return *pos > start;
  };
  if (i < s.size() && s[i] == '-') ++i;
  if (!digits(&i)) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  return digits(&i) && i == s.size();
}

}  // namespace

Rat parse_rat(const std::string& text) {
  if (!valid_rat_text(text))
    fail(ErrorKind::Parse, "expected integer or p/q rational, got \"" + text + "\"");
  Rat q(text);
  if (q.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

Int parse_int(const std::string& text) {
  Rat q = parse_rat(text);
  if (!is_integral(q)) fail(ErrorKind::Parse, "expected integer, got \"" + text + "\"");
  return q.get_num();
}

std::string to_string(const Rat& q) { return q.get_str(); }

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Rat frac_part(const Rat& q) { return q - Rat(floor_rat(q)); }

bool is_integral(const Rat& q) { return q.get_den() == 1; }

Rat dist_to_nearest_int(const Rat& q) {
  Rat f = frac_part(q);
  Rat g = 1 - f;
  return f < g ? f : g;
}

RatVec to_rat(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const Int& x : v) r.emplace_back(x);
  return r;
}

IntVec to_int(const RatVec& v) {
  IntVec r;
  r.reserve(v.size());
  for (const Rat& q : v) {
    if (!is_integral(q)) fail(ErrorKind::Domain, "vector entry " + to_string(q) + " is not an integer");
    r.push_back(q.get_num());
  }
  return r;
}

bool is_integral(const RatVec& v) {
  for (const Rat& q : v)
    if (!is_integral(q)) return false;
  return true;
}

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) fail(ErrorKind::Domain, "vector dimensions differ");
}

}  // namespace

RatVec add(const RatVec& a, const RatVec& b) {
  require_same_dim(a.size(), b.size());
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  require_same_dim(a.size(), b.size());
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Rat& s, const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
  require_same_dim(a.size(), b.size());
  Rat r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Int dot(const IntVec& a, const IntVec& b) {
  require_same_dim(a.size(), b.size());
  Int r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

IntVec add(const IntVec& a, const IntVec& b) {
  require_same_dim(a.size(), b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  require_same_dim(a.size(), b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::string render_vector(const IntVec& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  return out.str();
}

std::string render_vector(const RatVec& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  return out.str();
}

RatMat::RatMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

RatMat RatMat::from_columns(const std::vector<RatVec>& cols) {
  if (cols.empty()) fail(ErrorKind::Domain, "matrix needs at least one column");
  RatMat m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_same_dim(cols[c].size(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

RatMat RatMat::from_columns(const std::vector<IntVec>& cols) {
  std::vector<RatVec> rc;
  rc.reserve(cols.size());
  for (const IntVec& c : cols) rc.push_back(to_rat(c));
  return from_columns(rc);
}

RatVec solve_linear(const RatMat& a, const RatVec& b) {
  if (a.rows() != a.cols()) fail(ErrorKind::Domain, "solve_linear needs a square matrix");
  const std::size_t n = a.rows();
  require_same_dim(b.size(), n);
  RatMat m = a;
  RatVec rhs = b;
  std::vector<std::size_t> row_of(n);  // row holding the pivot of each column
  std::vector<bool> used(n, false);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = 0; r < n; ++r) {
      if (!used[r] && m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) fail(ErrorKind::SingularMatrix, "matrix is singular");
    used[pivot] = true;
    row_of[col] = pivot;
    const Rat inv_p = m.at(pivot, col);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == pivot || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col) / inv_p;
      for (std::size_t c = col; c < n; ++c) m.at(r, c) -= f * m.at(pivot, c);
      rhs[r] -= f * rhs[pivot];
    }
  }
  RatVec x(n);
  for (std::size_t col = 0; col < n; ++col) x[col] = rhs[row_of[col]] / m.at(row_of[col], col);
  return x;
}

std::size_t rank_of(const std::vector<RatVec>& vectors, std::size_t dim) {
  RatMat m(vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    require_same_dim(vectors[r].size(), dim);
    for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = vectors[r][c];
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < m.rows(); ++col) {
    std::size_t p = rank;
    while (p < m.rows() && m.at(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != rank)
      for (std::size_t c = 0; c < dim; ++c) std::swap(m.at(p, c), m.at(rank, c));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m.at(r, col) == 0) continue;
      Rat f = m.at(r, col) / m.at(rank, col);
      for (std::size_t c = col; c < dim; ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_of(const std::vector<IntVec>& vectors, std::size_t dim) {
  std::vector<RatVec> rv;
  rv.reserve(vectors.size());
  for (const IntVec& v : vectors) rv.push_back(to_rat(v));
  return rank_of(rv, dim);
}

Rat determinant(const RatMat& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::Domain, "determinant needs a square matrix");
  const std::size_t n = a.rows();
  RatMat m = a;
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m.at(r, col) == 0) continue;
      Rat f = m.at(r, col) / m.at(col, col);
      for (std::size_t c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

IntVec primitive_vector(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) fail(ErrorKind::Domain, "zero vector has no primitive form");
  IntVec r(v.size());
  int lead = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = v[i] / g;
    if (lead == 0 && r[i] != 0) lead = sgn(r[i]);
  }
  if (lead < 0)
    for (Int& x : r) x = -x;
  return r;
}

Int lcm_of_denominators(const RatVec& v) {
  Int l = 1;
  for (const Rat& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  return l;
}

IntVec kernel_normal(const std::vector<RatVec>& spanning, std::size_t dim) {
  if (spanning.size() + 1 != dim)
    fail(ErrorKind::Domain, "kernel_normal needs exactly dim-1 vectors");
  if (dim == 1) return IntVec{Int(1)};
  RatMat m(spanning.size(), dim);
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    require_same_dim(spanning[r].size(), dim);
    for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = spanning[r][c];
  }
  // Row-reduce; afterwards each pivot row determines one coordinate of the
  // kernel vector in terms of the single free column.
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < dim; ++c) std::swap(m.at(p, c), m.at(row, c));
    const Rat pv = m.at(row, col);
    for (std::size_t c = 0; c < dim; ++c) m.at(row, c) /= pv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (std::size_t c = 0; c < dim; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() != dim - 1)
    fail(ErrorKind::RankDeficient, "spanning vectors have rank below dim-1");
  std::size_t free_col = 0;
  for (std::size_t col = 0; col < dim; ++col) {
    bool is_pivot = false;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) is_pivot |= pivot_col[k] == col;
    if (!is_pivot) {
      free_col = col;
      break;
    }
  }
  RatVec x(dim, Rat(0));
  x[free_col] = 1;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = -m.at(k, free_col);
  Int l = lcm_of_denominators(x);
  IntVec scaled(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Rat q = x[i] * Rat(l);
    scaled[i] = q.get_num();
  }
  return primitive_vector(scaled);
}

Int gcd_of_minors(const RatMat& v, std::size_t i) {
  for (std::size_t r = 0; r < v.rows(); ++r)
    for (std::size_t c = 0; c < v.cols(); ++c)
      if (!is_integral(v.at(r, c)))
        fail(ErrorKind::Domain, "gcd_of_minors needs integer entries");
  if (i == 0) return Int(1);
  if (i > v.rows() || i > v.cols()) return Int(0);
  Int g = 0;
  bool done = false;
  for_each_combination(v.rows(), i, [&](const std::vector<std::size_t>& rows) {
    if (done) return;
    for_each_combination(v.cols(), i, [&](const std::vector<std::size_t>& cols) {
      if (done) return;
      RatMat sub(i, i);
      for (std::size_t r = 0; r < i; ++r)
        for (std::size_t c = 0; c < i; ++c) sub.at(r, c) = v.at(rows[r], cols[c]);
      Int d = determinant(sub).get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      if (g == 1) done = true;
    });
  });
  return g;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

const Int& enumeration_guard() {
  static const Int guard = [] {
    const char* env = std::getenv("ZONODEEP_MAX_BOX");
    if (env != nullptr) {
      try {
        Int v = parse_int(env);
        if (v > 0) return v;
      } catch (const Error&) {
      }
    }
    return Int(10000000);
  }();
  return guard;
}

}  // namespace zonodeep
