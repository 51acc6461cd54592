#include "clpa/graded_matrix.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "clpa/error.hpp"

namespace clpa {

  namespace {
    std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
      auto r = a % n;
      return r < 0 ? r + n : r;
    }

    std::string join(std::vector<std::int64_t> const& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i == 0 ? "" : ",") + std::to_string(v[i]);
      }
      return s;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GradedMatrixAlgebra
  ////////////////////////////////////////////////////////////////////////

  GradedMatrixAlgebra::GradedMatrixAlgebra(BlockKind                 k,
                                           std::int64_t              period,
                                           std::vector<std::int64_t> shifts,
                                           Field                     f)
      : _kind(k), _period(period), _shifts(std::move(shifts)), _field(f) {
    if (_shifts.empty()) {
      throw std::invalid_argument("a graded matrix algebra needs size >= 1");
    }
    if (_period < 1) {
      throw std::invalid_argument("the period must be positive");
    }
  }

  GradedMatrixAlgebra GradedMatrixAlgebra::field_block(std::vector<std::int64_t> shifts,
                                                       Field                     field) {
    return GradedMatrixAlgebra(BlockKind::field, 1, std::move(shifts), field);
  }

  GradedMatrixAlgebra GradedMatrixAlgebra::laurent_block(std::int64_t              period,
                                                         std::vector<std::int64_t> shifts,
                                                         Field                     field) {
    return GradedMatrixAlgebra(BlockKind::laurent, period, std::move(shifts), field);
  }

  std::int64_t GradedMatrixAlgebra::spread() const {
    auto [lo, hi] = std::minmax_element(_shifts.begin(), _shifts.end());
    return *hi - *lo;
  }

  std::string GradedMatrixAlgebra::to_string() const {
    std::string ring = "K";
    if (_kind == BlockKind::laurent) {
      ring = _period == 1 ? "K[x,x^-1]"
                          : "K[x^" + std::to_string(_period) + ",x^-" + std::to_string(_period) + "]";
    }
    return "M" + std::to_string(size()) + "(" + ring + ")(" + join(_shifts) + ")";
  }

  std::size_t component_dim(GradedMatrixAlgebra const& A, std::int64_t d) {
    std::size_t count = 0;
    auto const& g     = A.shifts();
    for (auto gi : g) {
      for (auto gj : g) {
        if (A.kind() == BlockKind::field ? gi - gj == d : floor_mod(d - (gi - gj), A.period()) == 0) {
          ++count;
        }
      }
    }
    return count;
  }

  ////////////////////////////////////////////////////////////////////////
  // GradedMatrix
  ////////////////////////////////////////////////////////////////////////

  GradedMatrix::GradedMatrix(std::shared_ptr<GradedMatrixAlgebra const> algebra)
      : _algebra(std::move(algebra)),
        _entries(_algebra->size() * _algebra->size(), LaurentPoly(_algebra->period())) {}

  GradedMatrix GradedMatrix::zero(std::shared_ptr<GradedMatrixAlgebra const> algebra) {
    return GradedMatrix(std::move(algebra));
  }

  GradedMatrix GradedMatrix::identity(std::shared_ptr<GradedMatrixAlgebra const> algebra) {
    GradedMatrix m(std::move(algebra));
    for (std::size_t i = 0; i < m.size(); ++i) {
      m.set_entry(i, i, LaurentPoly::constant(m.algebra().period(), m.algebra().field().one()));
    }
    return m;
  }

  GradedMatrix GradedMatrix::unit(std::shared_ptr<GradedMatrixAlgebra const> algebra,
                                  std::size_t                                i,
                                  std::size_t                                j,
                                  std::int64_t                               k) {
    GradedMatrix m(std::move(algebra));
    if (i >= m.size() || j >= m.size()) {
      throw AlgebraMismatch("matrix unit index out of range");
    }
    m.set_entry(i, j, LaurentPoly::monomial(m.algebra().period(), k, m.algebra().field().one()));
    return m;
  }

  void GradedMatrix::set_entry(std::size_t i, std::size_t j, LaurentPoly value) {
    if (value.period() != _algebra->period()) {
      throw AlgebraMismatch("entry period does not match the algebra");
    }
    if (_algebra->kind() == BlockKind::field && !value.is_constant()) {
      throw AlgebraMismatch("field-kind entries must be constants");
    }
    for (auto const& [k, c] : value.terms()) {
      if (!(c.field() == _algebra->field())) {
        throw FieldMismatch("entry over " + c.field().to_string() + " in an algebra over "
                            + _algebra->field().to_string());
      }
    }
    _entries.at(i * size() + j) = std::move(value);
  }

  void GradedMatrix::check_algebra(GradedMatrix const& rhs) const {
    if (_algebra != rhs._algebra && !(*_algebra == *rhs._algebra)) {
      throw AlgebraMismatch(_algebra->to_string() + " vs " + rhs._algebra->to_string());
    }
  }

  bool GradedMatrix::is_zero() const {
    return std::all_of(_entries.begin(), _entries.end(), [](auto const& f) { return f.is_zero(); });
  }

  bool GradedMatrix::is_homogeneous(std::int64_t d) const {
    auto const& g = _algebra->shifts();
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (!entry(i, j).is_homogeneous_of_degree(d + g[j] - g[i])) {
          return false;
        }
      }
    }
    return true;
  }

  GradedMatrix GradedMatrix::involution() const {
    GradedMatrix m(_algebra);
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        m._entries[i * size() + j] = entry(j, i).involution();
      }
    }
    return m;
  }

  GradedMatrix GradedMatrix::component_project(std::int64_t d) const {
    auto const&  g = _algebra->shifts();
    GradedMatrix m(_algebra);
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        m._entries[i * size() + j] = entry(i, j).project_degree(d + g[j] - g[i]);
      }
    }
    return m;
  }

  std::string GradedMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < size(); ++i) {
      os << (i == 0 ? "[" : ", [");
      for (std::size_t j = 0; j < size(); ++j) {
        os << (j == 0 ? "" : ", ") << entry(i, j).to_string();
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

  GradedMatrix& GradedMatrix::operator+=(GradedMatrix const& rhs) {
    check_algebra(rhs);
    for (std::size_t k = 0; k < _entries.size(); ++k) {
      _entries[k] += rhs._entries[k];
    }
    return *this;
  }

  GradedMatrix& GradedMatrix::operator-=(GradedMatrix const& rhs) {
    check_algebra(rhs);
    for (std::size_t k = 0; k < _entries.size(); ++k) {
      _entries[k] -= rhs._entries[k];
    }
    return *this;
  }

  GradedMatrix& GradedMatrix::operator*=(Scalar const& c) {
    for (auto& f : _entries) {
      f *= c;
    }
    return *this;
  }

  GradedMatrix operator*(GradedMatrix const& lhs, GradedMatrix const& rhs) {
    lhs.check_algebra(rhs);
    auto const   n = lhs.size();
    GradedMatrix m(lhs._algebra);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        auto const& a = lhs.entry(i, k);
        if (a.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          auto const& b = rhs.entry(k, j);
          if (!b.is_zero()) {
            m._entries[i * n + j] += a * b;
          }
        }
      }
    }
    return m;
  }

  bool operator==(GradedMatrix const& lhs, GradedMatrix const& rhs) {
    lhs.check_algebra(rhs);
    return lhs._entries == rhs._entries;
  }

  GradedMatrix graded_mat_mul(GradedMatrix const& a, GradedMatrix const& b) {
    return a * b;
  }

  GradedMatrix involution(GradedMatrix const& a) {
    return a.involution();
  }

  GradedMatrix component_project(GradedMatrix const& a, std::int64_t d) {
    return a.component_project(d);
  }

  ////////////////////////////////////////////////////////////////////////
  // Signatures
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::int64_t> canonical_field_shifts(std::vector<std::int64_t> s) {
    std::sort(s.begin(), s.end());
    if (!s.empty()) {
      auto const lo = s.front();
      for (auto& x : s) {
        x -= lo;
      }
    }
    return s;
  }

  std::vector<std::int64_t> canonical_laurent_shifts(std::vector<std::int64_t> s,
                                                     std::int64_t              period) {
    std::vector<std::int64_t> best;
    for (auto const pivot : s) {
      std::vector<std::int64_t> candidate;
      candidate.reserve(s.size());
      for (auto x : s) {
        candidate.push_back(floor_mod(x - pivot, period));
      }
      std::sort(candidate.begin(), candidate.end());
      if (best.empty() || candidate < best) {
        best = std::move(candidate);
      }
    }
    return best;
  }

  MatricialSignature MatricialSignature::canonical() const {
    MatricialSignature c;
    for (auto const& b : field_blocks) {
      c.field_blocks.push_back({b.size, canonical_field_shifts(b.shifts)});
    }
    for (auto const& b : laurent_blocks) {
      c.laurent_blocks.push_back({b.size, b.period, canonical_laurent_shifts(b.shifts, b.period)});
    }
    std::sort(c.field_blocks.begin(), c.field_blocks.end());
    std::sort(c.laurent_blocks.begin(), c.laurent_blocks.end());
    return c;
  }

  std::string MatricialSignature::to_string() const {
    std::vector<std::string> parts;
    auto                     emit = [&parts](std::string text, std::size_t count) {
      parts.push_back(count == 1 ? text : text + "^" + std::to_string(count));
    };
    for (std::size_t i = 0; i < field_blocks.size();) {
      std::size_t j = i;
      while (j < field_blocks.size() && field_blocks[j] == field_blocks[i]) {
        ++j;
      }
      emit("M" + std::to_string(field_blocks[i].size) + "(K)(" + join(field_blocks[i].shifts) + ")",
           j - i);
      i = j;
    }
    for (std::size_t i = 0; i < laurent_blocks.size();) {
      std::size_t j = i;
      while (j < laurent_blocks.size() && laurent_blocks[j] == laurent_blocks[i]) {
        ++j;
      }
      auto const& b = laurent_blocks[i];
      emit(GradedMatrixAlgebra::laurent_block(b.period, b.shifts).to_string(), j - i);
      i = j;
    }
    if (parts.empty()) {
      return "0";
    }
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
      s += " + " + parts[i];
    }
    return s;
  }

  std::vector<GradedMatrixAlgebra> MatricialSignature::algebras(Field const& field) const {
    std::vector<GradedMatrixAlgebra> out;
    for (auto const& b : field_blocks) {
      out.push_back(GradedMatrixAlgebra::field_block(b.shifts, field));
    }
    for (auto const& b : laurent_blocks) {
      out.push_back(GradedMatrixAlgebra::laurent_block(b.period, b.shifts, field));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graded isomorphism
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::yes:
        return "Yes";
      case Verdict::no:
        return "No";
      case Verdict::unknown:
        return "Unknown";
    }
    return "Unknown";
  }

  GradedMatrix apply_iso(IsoWitness const&                          w,
                         GradedMatrix const&                        x,
                         std::shared_ptr<GradedMatrixAlgebra const> B) {
    auto const   n = x.size();
    GradedMatrix y(B);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const& f = x.entry(i, j);
        if (f.is_zero()) {
          continue;
        }
        auto const        shift = w.offset[j] - w.offset[i];
        LaurentPoly::term_map terms;
        for (auto const& [k, c] : f.terms()) {
          terms.emplace(k + shift, c);
        }
        y.set_entry(w.perm[i], w.perm[j], LaurentPoly(B->period(), std::move(terms)));
      }
    }
    return y;
  }

  namespace {
    // Finds perm/offset with g_B(perm(i)) = g_A(i) + translation + offset(i) * period.
    std::optional<IsoWitness> find_translation(GradedMatrixAlgebra const& A,
                                               GradedMatrixAlgebra const& B) {
      if (A.kind() != B.kind() || A.size() != B.size() || A.period() != B.period()) {
        return std::nullopt;
      }
      auto const& ga = A.shifts();
      auto const& gb = B.shifts();
      auto const  n  = A.size();
      auto const  P  = A.period();
      bool const  laurent = A.kind() == BlockKind::laurent;

      std::vector<std::int64_t> candidates;
      if (laurent) {
        for (std::int64_t t = 0; t < P; ++t) {
          candidates.push_back(t);
        }
      } else {
        candidates.push_back(*std::min_element(gb.begin(), gb.end())
                             - *std::min_element(ga.begin(), ga.end()));
      }
      for (auto const tau : candidates) {
        IsoWitness        w;
        std::vector<bool> used(n, false);
        w.translation = tau;
        bool ok       = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          ok = false;
          for (std::size_t j = 0; j < n; ++j) {
            auto const diff = gb[j] - ga[i] - tau;
            if (!used[j] && (laurent ? floor_mod(diff, P) == 0 : diff == 0)) {
              used[j] = true;
              w.perm.push_back(j);
              w.offset.push_back(diff / P);
              ok = true;
              break;
            }
          }
        }
        if (ok) {
          return w;
        }
      }
      return std::nullopt;
    }

    // Checks the witness on matrix units: degrees, multiplication, involution.
    bool verify_witness(IsoWitness const& w, GradedMatrixAlgebra const& A, GradedMatrixAlgebra const& B) {
      auto const pa = std::make_shared<GradedMatrixAlgebra const>(A);
      auto const pb = std::make_shared<GradedMatrixAlgebra const>(B);
      auto const n  = A.size();
      std::vector<std::int64_t> powers{0};
      if (A.kind() == BlockKind::laurent) {
        powers = {-1, 0, 1};
      }
      auto phi = [&](std::size_t i, std::size_t j, std::int64_t k) {
        return apply_iso(w, GradedMatrix::unit(pa, i, j, k), pb);
      };
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (auto k : powers) {
            auto const img = phi(i, j, k);
            if (!img.is_homogeneous(A.unit_degree(i, j, k)) || img.is_zero()) {
              return false;
            }
            if (!(img.involution() == phi(j, i, -k))) {
              return false;
            }
          }
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t l = 0; l < n; ++l) {
            for (auto k : powers) {
              if (!(phi(i, j, k) * phi(j, l, 0) == phi(i, l, k))) {
                return false;
              }
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  IsoDecision decide_graded_iso(GradedMatrixAlgebra const& A, GradedMatrixAlgebra const& B) {
    if (!(A.field() == B.field())) {
      throw FieldMismatch("graded algebras over " + A.field().to_string() + " and "
                          + B.field().to_string());
    }
    IsoDecision result;
    result.window = 2 * std::max(A.spread(), B.spread()) + std::max(A.period(), B.period());

    if (auto w = find_translation(A, B)) {
      w->verified = verify_witness(*w, A, B);
      if (w->verified) {
        result.verdict = Verdict::yes;
        result.witness = std::move(w);
        return result;
      }
    }
    for (std::int64_t step = 0; step <= 2 * result.window; ++step) {
      std::int64_t const delta = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
      auto const         da    = component_dim(A, delta);
      auto const         db    = component_dim(B, delta);
      if (da != db) {
        result.verdict     = Verdict::no;
        result.certificate = IsoCertificate{delta, da, db, result.window};
        return result;
      }
    }
    result.verdict = Verdict::unknown;
    return result;
  }

  bool brute_force_iso_oracle(GradedMatrixAlgebra const& A, GradedMatrixAlgebra const& B) {
    if (A.size() > 3 || B.size() > 3) {
      throw OracleScaleExceeded("brute-force oracle supports n <= 3");
    }
    if (A.field().characteristic() != 2 || B.field().characteristic() != 2
        || A.kind() != BlockKind::field || B.kind() != BlockKind::field) {
      throw FieldMismatch("brute-force oracle needs field-kind algebras over GF(2)");
    }
    if (A.size() != B.size()) {
      return false;
    }
    auto const n     = A.size();
    auto const cells = n * n;
    auto const& ga   = A.shifts();
    auto const& gb   = B.shifts();

    using Mat = std::vector<std::vector<int>>;
    auto inverse = [n](Mat m) -> std::optional<Mat> {
      Mat inv(n, std::vector<int>(n, 0));
      for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = 1;
      }
      for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) {
          ++pivot;
        }
        if (pivot == n) {
          return std::nullopt;
        }
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        for (std::size_t r = 0; r < n; ++r) {
          if (r != col && m[r][col] != 0) {
            for (std::size_t c = 0; c < n; ++c) {
              m[r][c] ^= m[col][c];
              inv[r][c] ^= inv[col][c];
            }
          }
        }
      }
      return inv;
    };

    for (std::uint32_t bits = 0; bits < (1U << cells); ++bits) {
      Mat U(n, std::vector<int>(n, 0));
      for (std::size_t k = 0; k < cells; ++k) {
        U[k / n][k % n] = static_cast<int>((bits >> k) & 1U);
      }
      auto const Uinv = inverse(U);
      if (!Uinv) {
        continue;
      }
      bool good = true;
      // U e_ij U^-1 has entry (k, l) equal to U[k][i] * Uinv[j][l].
      for (std::size_t i = 0; i < n && good; ++i) {
        for (std::size_t j = 0; j < n && good; ++j) {
          auto const d = ga[i] - ga[j];
          for (std::size_t k = 0; k < n && good; ++k) {
            for (std::size_t l = 0; l < n && good; ++l) {
              if (U[k][i] != 0 && (*Uinv)[j][l] != 0 && gb[k] - gb[l] != d) {
                good = false;
              }
            }
          }
        }
      }
      if (good) {
        return true;
      }
    }
    return false;
  }

  namespace {
    // Maximum bipartite matching by augmenting paths.
    std::optional<std::vector<std::size_t>>
    perfect_matching(std::vector<std::vector<bool>> const& allowed) {
      auto const                n = allowed.size();
      std::vector<std::size_t>  match_b(n, n);
      std::function<bool(std::size_t, std::vector<bool>&)> augment
          = [&](std::size_t a, std::vector<bool>& seen) {
              for (std::size_t b = 0; b < n; ++b) {
                if (allowed[a][b] && !seen[b]) {
                  seen[b] = true;
                  if (match_b[b] == n || augment(match_b[b], seen)) {
                    match_b[b] = a;
                    return true;
                  }
                }
              }
              return false;
            };
      for (std::size_t a = 0; a < n; ++a) {
        std::vector<bool> seen(n, false);
        if (!augment(a, seen)) {
          return std::nullopt;
        }
      }
      std::vector<std::size_t> match_a(n);
      for (std::size_t b = 0; b < n; ++b) {
        match_a[match_b[b]] = b;
      }
      return match_a;
    }
  }  // namespace

  SignatureIsoDecision decide_signature_iso(MatricialSignature const& a,
                                            MatricialSignature const& b,
                                            Field const&              field) {
    SignatureIsoDecision result;
    auto const           A = a.algebras(field);
    auto const           B = b.algebras(field);
    if (A.size() != B.size()) {
      result.verdict = Verdict::no;
      result.reason  = "block counts differ (" + std::to_string(A.size()) + " vs "
                      + std::to_string(B.size()) + ")";
      return result;
    }
    auto const                             n = A.size();
    std::vector<std::vector<IsoDecision>>  table(n);
    std::vector<std::vector<bool>>         yes(n, std::vector<bool>(n));
    std::vector<std::vector<bool>>         maybe(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i].push_back(decide_graded_iso(A[i], B[j]));
        yes[i][j]   = table[i][j].verdict == Verdict::yes;
        maybe[i][j] = table[i][j].verdict != Verdict::no;
      }
    }
    if (auto m = perfect_matching(yes)) {
      result.verdict = Verdict::yes;
      result.reason  = "blocks match pairwise";
      for (std::size_t i = 0; i < n; ++i) {
        result.matching.push_back({i, (*m)[i], table[i][(*m)[i]]});
      }
      return result;
    }
    if (!perfect_matching(maybe)) {
      result.verdict = Verdict::no;
      result.reason  = "no pairing of blocks survives the component-dimension test";
      return result;
    }
    result.verdict = Verdict::unknown;
    result.reason  = "some block pairs are undecided";
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // MatricialAlgebra, MatricialElement
  ////////////////////////////////////////////////////////////////////////

  MatricialAlgebra::MatricialAlgebra(std::vector<GradedMatrixAlgebra> blocks, Field field)
      : _field(field) {
    for (auto& b : blocks) {
      if (!(b.field() == field)) {
        throw FieldMismatch("block over " + b.field().to_string());
      }
      _blocks.push_back(std::make_shared<GradedMatrixAlgebra const>(std::move(b)));
    }
  }

  MatricialElement::MatricialElement(std::shared_ptr<MatricialAlgebra const> algebra)
      : _algebra(std::move(algebra)) {
    for (std::size_t b = 0; b < _algebra->block_count(); ++b) {
      _blocks.push_back(GradedMatrix::zero(_algebra->block(b)));
    }
  }

  MatricialElement MatricialElement::zero(std::shared_ptr<MatricialAlgebra const> algebra) {
    return MatricialElement(std::move(algebra));
  }

  MatricialElement MatricialElement::unit(std::shared_ptr<MatricialAlgebra const> algebra,
                                          std::size_t                             b,
                                          std::size_t                             i,
                                          std::size_t                             j,
                                          std::int64_t                            k) {
    MatricialElement x(std::move(algebra));
    x._blocks.at(b) = GradedMatrix::unit(x._algebra->block(b), i, j, k);
    return x;
  }

  void MatricialElement::check_algebra(MatricialElement const& rhs) const {
    if (_algebra != rhs._algebra) {
      throw AlgebraMismatch("elements of different direct sums");
    }
  }

  bool MatricialElement::is_zero() const {
    return std::all_of(_blocks.begin(), _blocks.end(), [](auto const& m) { return m.is_zero(); });
  }

  bool MatricialElement::is_homogeneous(std::int64_t d) const {
    return std::all_of(
        _blocks.begin(), _blocks.end(), [d](auto const& m) { return m.is_homogeneous(d); });
  }

  MatricialElement MatricialElement::involution() const {
    MatricialElement x = *this;
    for (auto& m : x._blocks) {
      m = m.involution();
    }
    return x;
  }

  std::string MatricialElement::to_string() const {
    std::string s;
    for (std::size_t b = 0; b < _blocks.size(); ++b) {
      s += (b == 0 ? "(" : ", ") + _blocks[b].to_string();
    }
    return s + ")";
  }

  std::map<MatricialElement::Key, Scalar> MatricialElement::coordinates() const {
    std::map<Key, Scalar> out;
    for (std::size_t b = 0; b < _blocks.size(); ++b) {
      auto const& m = _blocks[b];
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          for (auto const& [k, c] : m.entry(i, j).terms()) {
            out.emplace(Key{b, i, j, k}, c);
          }
        }
      }
    }
    return out;
  }

  MatricialElement& MatricialElement::operator+=(MatricialElement const& rhs) {
    check_algebra(rhs);
    for (std::size_t b = 0; b < _blocks.size(); ++b) {
      _blocks[b] += rhs._blocks[b];
    }
    return *this;
  }

  MatricialElement& MatricialElement::operator-=(MatricialElement const& rhs) {
    check_algebra(rhs);
    for (std::size_t b = 0; b < _blocks.size(); ++b) {
      _blocks[b] -= rhs._blocks[b];
    }
    return *this;
  }

  MatricialElement& MatricialElement::operator*=(Scalar const& c) {
    for (auto& m : _blocks) {
      m *= c;
    }
    return *this;
  }

  MatricialElement operator*(MatricialElement const& lhs, MatricialElement const& rhs) {
    lhs.check_algebra(rhs);
    MatricialElement x = lhs;
    for (std::size_t b = 0; b < x._blocks.size(); ++b) {
      x._blocks[b] = lhs._blocks[b] * rhs._blocks[b];
    }
    return x;
  }

  bool operator==(MatricialElement const& lhs, MatricialElement const& rhs) {
    lhs.check_algebra(rhs);
    return lhs._blocks == rhs._blocks;
  }

}  // namespace clpa
