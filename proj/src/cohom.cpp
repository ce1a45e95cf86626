#include "cohom.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "error.hpp"
#include "promod.hpp"

namespace kbgq {

namespace {

IntMatrix matrix_power(const IntMatrix& m, std::uint64_t k) {
  IntMatrix out = IntMatrix::identity(m.rows());
  for (std::uint64_t i = 0; i < k; ++i) out = out * m;
  return out;
}

Int trace(const IntMatrix& m) {
  Int t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

std::uint64_t checked_u64(const Rational& q, const char* what) {
  if (q.get_den() != 1 || q < 0) throw InternalConsistencyError(std::string(what) + " is not a nonnegative integer");
  return to_u64(q.get_num());
}

}  // namespace

void validate(const CrystalSpec& s) {
  if (!is_prime(s.p)) throw ValidationError("p = " + std::to_string(s.p) + " is not prime");
  const auto n = s.sigma.rows();
  if (s.sigma.cols() != n) throw ValidationError("sigma must be square");
  if (n == 0) return;
  const auto id = IntMatrix::identity(n);
  if (s.sigma == id) throw ValidationError("sigma is the identity; the action must have order p");
  if (!(matrix_power(s.sigma, s.p) == id))
    throw ValidationError("sigma^" + std::to_string(s.p) + " is not the identity");
}

std::vector<Rational> exterior_traces(const IntMatrix& m) {
  const auto n = m.rows();
  std::vector<Rational> power_sums(n + 1);
  IntMatrix pw = IntMatrix::identity(n);
  for (std::size_t i = 1; i <= n; ++i) {
    pw = pw * m;
    power_sums[i] = trace(pw);
  }
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += ((i % 2) ? 1 : -1) * e[k - i] * power_sums[i];
    e[k] = acc / Rational(static_cast<long>(k));
  }
  return e;
}

Betti betti_crystallographic(const CrystalSpec& s) {
  validate(s);
  const auto n = s.sigma.rows();
  std::vector<Rational> sum(n + 1, 0);
  IntMatrix pw = IntMatrix::identity(n);
  for (std::uint64_t j = 0; j < s.p; ++j) {
    auto e = exterior_traces(pw);
    for (std::size_t k = 0; k <= n; ++k) sum[k] += e[k];
    pw = pw * s.sigma;
  }
  Betti b;
  for (auto& v : sum) b.push_back(checked_u64(v / Rational(static_cast<unsigned long>(s.p)), "averaged trace"));
  return b;
}

H1Fixed h1_and_fixed(const CrystalSpec& s) {
  validate(s);
  const auto n = s.sigma.rows();
  H1Fixed out;
  if (n == 0) {
    out.h1_order = 1;
    return out;
  }
  IntMatrix norm(n, n), pw = IntMatrix::identity(n);
  for (std::uint64_t i = 0; i < s.p; ++i) {
    norm = norm + pw;
    pw = pw * s.sigma;
  }
  const IntMatrix diff = s.sigma - IntMatrix::identity(n);
  Subquotient h1(kernel(norm), diff);
  auto inv = h1.structure();
  if (inv.free_rank != 0) throw InternalConsistencyError("H^1(Z/p; A) is infinite");
  out.h1_order = 1;
  for (const auto& t : inv.torsion) out.h1_order *= t;
  out.h1_invariants = inv.torsion;
  Int rest = out.h1_order;
  while (rest % Int(static_cast<unsigned long>(s.p)) == 0) rest /= Int(static_cast<unsigned long>(s.p));
  if (rest != 1) throw InternalConsistencyError("|H^1(Z/p; A)| is not a power of p");
  out.fixed_rank = kernel(diff).rows();
  return out;
}

Int con_count_crystallographic(const CrystalSpec& s) {
  return Int(static_cast<unsigned long>(s.p - 1)) * h1_and_fixed(s).h1_order;
}

void validate(const FuchsianSpec& s) {
  Rational chi = 2 * Rational(static_cast<unsigned long>(s.genus)) - 2;
  for (auto m : s.periods) {
    if (m < 2) throw ValidationError("periods must be at least 2");
    chi += 1 - Rational(1, static_cast<unsigned long>(m));
  }
  if (chi <= 0) throw ValidationError("signature is not hyperbolic: 2g - 2 + sum(1 - 1/m_i) = " + chi.get_str());
}

PrimeCounts cyclic_prime_counts(std::uint64_t m) {
  PrimeCounts out;
  for (auto p : prime_divisors(m)) out[p] = p_part(m, p) - 1;
  return out;
}

FuchsianData betti_fuchsian(const FuchsianSpec& s) {
  validate(s);
  FuchsianData out;
  out.betti = {1, 2 * s.genus, 1};
  for (auto m : s.periods)
    for (auto [p, c] : cyclic_prime_counts(m)) out.counts[p] += c;
  return out;
}

// ---------------------------------------------------------------- words

namespace {

class WordParser {
 public:
  WordParser(const std::vector<std::string>& gens, const std::string& text) : gens_(gens), text_(text) {}

  Word parse() {
    Word w = product();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("/spec/relator", msg + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*')) ++pos_;
  }

  Word product() {
    Word w;
    for (;;) {
      skip();
      if (pos_ == text_.size() || text_[pos_] == ')') return w;
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
  }

  Word factor() {
    Word base;
    if (text_[pos_] == '(') {
      ++pos_;
      base = product();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else if (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto it = std::find(gens_.begin(), gens_.end(), name);
      if (it == gens_.end()) {
        pos_ = start;
        fail("unknown generator '" + name + "'");
      }
      base = {static_cast<int>(it - gens_.begin()) + 1};
    } else {
      fail("expected a generator or '('");
    }
    long e = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto digits = text_.substr(start, pos_ - start);
      if (digits.empty() || digits == "-" || digits == "+") fail("expected an exponent");
      if (digits.size() > 7) fail("exponent too large");
      e = std::stol(digits);
    }
    Word out;
    Word inv(base.rbegin(), base.rend());
    for (auto& l : inv) l = -l;
    const Word& unit = e < 0 ? inv : base;
    for (long i = 0; i < std::labs(e); ++i) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  const std::vector<std::string>& gens_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::vector<std::string>& generators, const std::string& text) {
  return WordParser(generators, text).parse();
}

std::string format_word(const std::vector<std::string>& generators, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += generators.at(static_cast<std::size_t>(std::abs(w[i]) - 1));
    long e = static_cast<long>(j - i) * (w[i] < 0 ? -1 : 1);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out.empty() ? "1" : out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a] == -r[b - 1]) {
    ++a;
    --b;
  }
  return Word(r.begin() + static_cast<long>(a), r.begin() + static_cast<long>(b));
}

RootData extract_root(const Word& w) {
  if (w.empty()) throw ValidationError("the empty word has no root");
  const auto len = w.size();
  for (auto d : divisors(len)) {
    bool periodic = true;
    for (std::size_t i = d; i < len && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return {Word(w.begin(), w.begin() + static_cast<long>(d)), len / d};
  }
  return {w, 1};
}

OneRelatorData one_relator_analyze(const OneRelatorSpec& s) {
  if (s.generators.empty()) throw ValidationError("a one-relator presentation needs at least one generator");
  for (std::size_t i = 0; i < s.generators.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (s.generators[i] == s.generators[j]) throw ValidationError("duplicate generator '" + s.generators[i] + "'");
  OneRelatorData out;
  out.reduced = cyclic_reduce(parse_word(s.generators, s.relator));
  if (out.reduced.empty()) throw ValidationError("relator reduces to the empty word");
  auto root = extract_root(out.reduced);
  out.root = root.root;
  out.m = root.multiplicity;
  const auto k = s.generators.size();
  out.exponent_sums.assign(k, 0);
  for (int l : out.reduced) out.exponent_sums[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
  const std::uint64_t r = std::any_of(out.exponent_sums.begin(), out.exponent_sums.end(),
                                      [](const Int& v) { return v != 0; });
  out.betti = {1, k - r, 1 - r};
  if (out.m > 1) out.counts = cyclic_prime_counts(out.m);
  return out;
}

Betti exterior_betti(std::uint64_t d) {
  Betti out;
  Int c = 1;
  for (std::uint64_t k = 0; k <= d; ++k) {
    out.push_back(to_u64(c));
    c = c * Int(static_cast<unsigned long>(d - k)) / Int(static_cast<unsigned long>(k + 1));
  }
  return out;
}

}  // namespace kbgq
