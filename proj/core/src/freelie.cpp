#include "fglie/freelie.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <sstream>

namespace fglie {

namespace {

void check_generators(int k) {
  if (k < 1 || k > kMaxGenerators)
    throw std::invalid_argument("generator count must be in 1.." + std::to_string(kMaxGenerators));
}

WordPolynomial multiply(const WordPolynomial &a, const WordPolynomial &b, size_t bound) {
  WordPolynomial r;
  for (const auto &[wa, ca] : a) {
    for (const auto &[wb, cb] : b) {
      if (wa.size() + wb.size() > bound)
        break;
      mpq_class c = ca * cb;
      auto [it, inserted] = r.try_emplace(wa + wb, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0)
          r.erase(it);
      }
    }
  }
  return r;
}

void accumulate(WordPolynomial &target, const WordPolynomial &source, const mpq_class &scale) {
  for (const auto &[w, c] : source) {
    auto [it, inserted] = target.try_emplace(w, scale * c);
    if (!inserted) {
      it->second += scale * c;
      if (it->second == 0)
        target.erase(it);
    }
  }
}

std::string word_to_string(const Word &w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += "*";
    out += "x";
    out += w[i];
  }
  return out;
}

template <class Terms> std::string terms_to_string(const Terms &terms, bool bracketed) {
  if (terms.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[w, c] : terms) {
    if (!first)
      out << " + ";
    first = false;
    if (c != 1)
      out << c.get_str() << "*";
    out << (bracketed ? bracketing(w) : word_to_string(w));
  }
  return out.str();
}

} // namespace

char letter(int i) {
  if (i < 0 || i >= kMaxGenerators)
    throw std::out_of_range("generator index out of range");
  return static_cast<char>('1' + i);
}

bool is_lyndon(const Word &w) {
  if (w.empty())
    return false;
  for (size_t i = 1; i < w.size(); ++i) {
    Word rotation = w.substr(i) + w.substr(0, i);
    if (!(w < rotation))
      return false;
  }
  return true;
}

std::vector<Word> lyndon_words(int k, int max_length) {
  check_generators(k);
  if (max_length < 1)
    throw std::invalid_argument("lyndon_words: length bound must be >= 1");
  // Duval's generation of all Lyndon words up to the length bound.
  std::vector<Word> out;
  std::vector<int> w{-1};
  const char last = letter(k - 1);
  while (!w.empty()) {
    ++w.back();
    Word word;
    for (int c : w)
      word.push_back(static_cast<char>('1' + c));
    out.push_back(word);
    size_t m = w.size();
    while (static_cast<int>(w.size()) < max_length)
      w.push_back(w[w.size() - m]);
    while (!w.empty() && static_cast<char>('1' + w.back()) == last)
      w.pop_back();
  }
  std::sort(out.begin(), out.end(), GradedWordLess{});
  return out;
}

std::pair<Word, Word> standard_factorization(const Word &w) {
  if (w.size() < 2)
    throw std::invalid_argument("standard factorization needs a word of length >= 2");
  for (size_t i = 1; i < w.size(); ++i) {
    Word suffix = w.substr(i);
    if (is_lyndon(suffix))
      return {w.substr(0, i), suffix};
  }
  throw std::logic_error("no proper Lyndon suffix");
}

std::string bracketing(const Word &w) {
  if (w.size() == 1)
    return std::string("x") + w[0];
  auto [u, v] = standard_factorization(w);
  return "[" + bracketing(u) + "," + bracketing(v) + "]";
}

// ---------------------------------------------------------------------------

AssocSeries::AssocSeries(int generators, int degree_bound) : k_(generators), n_(degree_bound) {
  check_generators(generators);
  if (degree_bound < 0)
    throw std::invalid_argument("negative degree bound");
}

AssocSeries AssocSeries::one(int generators, int degree_bound) {
  AssocSeries s(generators, degree_bound);
  s.add_term(Word(), 1);
  return s;
}

AssocSeries AssocSeries::generator(int generators, int degree_bound, int i) {
  if (i < 0 || i >= generators)
    throw std::out_of_range("generator index out of range");
  AssocSeries s(generators, degree_bound);
  s.add_term(Word(1, letter(i)), 1);
  return s;
}

void AssocSeries::check_shape(const AssocSeries &other) const {
  if (k_ != other.k_ || n_ != other.n_)
    throw std::invalid_argument("associative series shape mismatch");
}

mpq_class AssocSeries::coefficient(const Word &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void AssocSeries::add_term(const Word &w, const mpq_class &value) {
  mpq_class c = value;
  c.canonicalize();
  if (static_cast<int>(w.size()) > n_ || c == 0)
    return;
  for (char ch : w)
    if (ch < '1' || ch >= '1' + k_)
      throw std::invalid_argument("word uses a letter outside the alphabet");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

AssocSeries AssocSeries::homogeneous_part(int degree) const {
  AssocSeries r(k_, n_);
  for (const auto &[w, c] : terms_)
    if (static_cast<int>(w.size()) == degree)
      r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

AssocSeries AssocSeries::truncated(int degree_bound) const {
  AssocSeries r(k_, degree_bound);
  for (const auto &[w, c] : terms_)
    if (static_cast<int>(w.size()) <= degree_bound)
      r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

AssocSeries &AssocSeries::operator+=(const AssocSeries &other) {
  check_shape(other);
  accumulate(terms_, other.terms_, 1);
  return *this;
}

AssocSeries &AssocSeries::operator-=(const AssocSeries &other) {
  check_shape(other);
  accumulate(terms_, other.terms_, -1);
  return *this;
}

AssocSeries operator*(const AssocSeries &a, const AssocSeries &b) {
  a.check_shape(b);
  AssocSeries r(a.k_, a.n_);
  r.terms_ = multiply(a.terms_, b.terms_, static_cast<size_t>(a.n_));
  return r;
}

AssocSeries operator*(const mpq_class &c, const AssocSeries &a) {
  AssocSeries r(a.k_, a.n_);
  if (c != 0)
    accumulate(r.terms_, a.terms_, c);
  return r;
}

std::string AssocSeries::to_string() const { return terms_to_string(terms_, false); }

AssocSeries exp_series(const AssocSeries &a) {
  if (a.coefficient(Word()) != 0)
    throw std::invalid_argument("exp_series: nonzero constant term");
  AssocSeries result = AssocSeries::one(a.generators(), a.degree_bound());
  AssocSeries power = result;
  for (int n = 1; n <= a.degree_bound(); ++n) {
    power = mpq_class(1, n) * (power * a);
    if (power.is_zero())
      break;
    result += power;
  }
  return result;
}

AssocSeries log_one_plus(const AssocSeries &u) {
  if (u.coefficient(Word()) != 0)
    throw std::invalid_argument("log_one_plus: nonzero constant term");
  AssocSeries result(u.generators(), u.degree_bound());
  AssocSeries power = u;
  for (int i = 1; i <= u.degree_bound() && !power.is_zero(); ++i) {
    mpq_class c(i % 2 == 1 ? 1 : -1, i);
    result += c * power;
    power = power * u;
  }
  return result;
}

AssocSeries commutator(const AssocSeries &a, const AssocSeries &b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

LieSeries::LieSeries(int generators, int degree_bound) : k_(generators), n_(degree_bound) {
  check_generators(generators);
  if (degree_bound < 0)
    throw std::invalid_argument("negative degree bound");
}

LieSeries LieSeries::generator(int generators, int degree_bound, int i) {
  if (i < 0 || i >= generators)
    throw std::out_of_range("generator index out of range");
  LieSeries s(generators, degree_bound);
  s.add_term(Word(1, letter(i)), 1);
  return s;
}

mpq_class LieSeries::coefficient(const Word &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void LieSeries::add_term(const Word &w, const mpq_class &value) {
  mpq_class c = value;
  c.canonicalize();
  if (static_cast<int>(w.size()) > n_ || c == 0)
    return;
  if (!is_lyndon(w))
    throw std::invalid_argument("'" + w + "' is not a Lyndon word");
  for (char ch : w)
    if (ch < '1' || ch >= '1' + k_)
      throw std::invalid_argument("word uses a letter outside the alphabet");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

LieSeries LieSeries::homogeneous_part(int degree) const {
  LieSeries r(k_, n_);
  for (const auto &[w, c] : terms_)
    if (static_cast<int>(w.size()) == degree)
      r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

LieSeries LieSeries::truncated(int degree_bound) const {
  LieSeries r(k_, degree_bound);
  for (const auto &[w, c] : terms_)
    if (static_cast<int>(w.size()) <= degree_bound)
      r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

LieSeries &LieSeries::operator+=(const LieSeries &other) {
  if (k_ != other.k_ || n_ != other.n_)
    throw std::invalid_argument("Lie series shape mismatch");
  accumulate(terms_, other.terms_, 1);
  return *this;
}

LieSeries &LieSeries::operator-=(const LieSeries &other) {
  if (k_ != other.k_ || n_ != other.n_)
    throw std::invalid_argument("Lie series shape mismatch");
  accumulate(terms_, other.terms_, -1);
  return *this;
}

LieSeries operator*(const mpq_class &c, const LieSeries &a) {
  LieSeries r(a.k_, a.n_);
  if (c != 0)
    accumulate(r.terms_, a.terms_, c);
  return r;
}

std::string LieSeries::to_string() const { return terms_to_string(terms_, true); }

const WordPolynomial &lyndon_expansion(const Word &w) {
  static std::mutex mutex;
  static std::map<Word, WordPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(w);
    if (it != cache.end())
      return it->second;
  }
  if (!is_lyndon(w))
    throw std::invalid_argument("'" + w + "' is not a Lyndon word");
  WordPolynomial p;
  if (w.size() == 1) {
    p.emplace(w, 1);
  } else {
    auto [u, v] = standard_factorization(w);
    const WordPolynomial &pu = lyndon_expansion(u);
    const WordPolynomial &pv = lyndon_expansion(v);
    p = multiply(pu, pv, w.size());
    accumulate(p, multiply(pv, pu, w.size()), -1);
    // leading-term triangularity of the Lyndon basis
    if (p.empty() || p.begin()->first != w || p.begin()->second != 1)
      throw std::logic_error("Lyndon expansion of '" + w + "' lacks leading term");
  }
  std::lock_guard lock(mutex);
  return cache.emplace(w, std::move(p)).first->second;
}

AssocSeries expand(const LieSeries &s) {
  AssocSeries r(s.generators(), s.degree_bound());
  for (const auto &[w, c] : s.terms()) {
    AssocSeries piece(s.generators(), s.degree_bound());
    for (const auto &[word, coeff] : lyndon_expansion(w))
      piece.add_term(word, coeff);
    r += c * piece;
  }
  return r;
}

LieSeries project_to_lie(const AssocSeries &a) {
  LieSeries result(a.generators(), a.degree_bound());
  if (a.coefficient(Word()) != 0)
    throw NotPrimitive("constant term is not a Lie element", Word());
  WordPolynomial remainder = a.terms();
  while (!remainder.empty()) {
    auto it = remainder.begin();
    const Word w = it->first;
    const mpq_class c = it->second;
    if (!is_lyndon(w))
      throw NotPrimitive("leftover word '" + w + "' after elimination: input is not a Lie element", w);
    accumulate(remainder, lyndon_expansion(w), -c);
    assert(remainder.find(w) == remainder.end());
    result.add_term(w, c);
  }
  return result;
}

LieSeries lie_bracket(const LieSeries &a, const LieSeries &b) {
  if (a.generators() != b.generators() || a.degree_bound() != b.degree_bound())
    throw std::invalid_argument("Lie series shape mismatch");
  return project_to_lie(commutator(expand(a), expand(b)));
}

} // namespace fglie
