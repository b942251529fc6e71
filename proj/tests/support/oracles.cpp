#include "oracles.hpp"

#include <algorithm>
#include <sstream>

namespace oracle {

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const mpq_class &x) { return x == 0; });
}

Mat operator+(const Mat &a, const Mat &b) {
  Mat r(a.n_);
  for (size_t i = 0; i < a.a_.size(); ++i)
    r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

Mat operator-(const Mat &a, const Mat &b) {
  Mat r(a.n_);
  for (size_t i = 0; i < a.a_.size(); ++i)
    r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

Mat operator*(const Mat &a, const Mat &b) {
  const int n = a.n_;
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a(i, k) == 0)
        continue;
      for (int j = 0; j < n; ++j)
        r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

Mat operator*(const mpq_class &c, const Mat &a) {
  Mat r = a;
  for (auto &x : r.a_)
    x *= c;
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j)
      os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

Mat exp_nilpotent(const Mat &X) {
  Mat sum = Mat::identity(X.size());
  Mat term = Mat::identity(X.size());
  for (int k = 1; k <= X.size(); ++k) {
    term = mpq_class(1, k) * (term * X);
    if (term.is_zero())
      break;
    sum = sum + term;
  }
  return sum;
}

Mat log_unipotent(const Mat &U) {
  const Mat N = U - Mat::identity(U.size());
  Mat sum(U.size());
  Mat power = Mat::identity(U.size());
  for (int k = 1; k <= U.size(); ++k) {
    power = power * N;
    if (power.is_zero())
      break;
    mpq_class c(k % 2 ? 1 : -1, k);
    sum = sum + c * power;
  }
  return sum;
}

Mat bracket(const Mat &a, const Mat &b) { return a * b - b * a; }

Mat random_strict_upper(int n, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  Mat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      mpq_class q(num(rng), den(rng));
      q.canonicalize();
      m(i, j) = q;
    }
  return m;
}

namespace {
int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}
} // namespace

long necklace_count(int k, int n) {
  long total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d)
      continue;
    long power = 1;
    for (int i = 0; i < n / d; ++i)
      power *= k;
    total += mobius(d) * power;
  }
  return total / n;
}

std::vector<std::string> lyndon_brute_force(int k, int n) {
  std::vector<std::string> out;
  for (int len = 1; len <= n; ++len) {
    std::vector<int> digits(static_cast<size_t>(len), 0);
    while (true) {
      std::string w;
      for (int d : digits)
        w += static_cast<char>('1' + d);
      bool lyndon = true;
      for (int r = 1; r < len && lyndon; ++r)
        if (!(w < w.substr(static_cast<size_t>(r)) + w.substr(0, static_cast<size_t>(r))))
          lyndon = false;
      if (lyndon)
        out.push_back(w);
      int pos = len - 1;
      while (pos >= 0 && digits[static_cast<size_t>(pos)] == k - 1)
        digits[static_cast<size_t>(pos--)] = 0;
      if (pos < 0)
        break;
      ++digits[static_cast<size_t>(pos)];
    }
  }
  return out;
}

int valuation(const mpq_class &q, int p) {
  int v = 0;
  mpz_class num = q.get_num(), den = q.get_den();
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

} // namespace oracle
