#include "delta2n/symmetric_group.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "delta2n/errors.hpp"

namespace delta2n {

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation out(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

int sign(const Permutation& p) {
  return (static_cast<int>(p.size()) - cycle_type(p).length()) % 2 == 0 ? 1 : -1;
}

Permutation adjacent_transposition(int n, int i) {
  Permutation p = identity_permutation(n);
  std::swap(p.at(i), p.at(i + 1));
  return p;
}

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity_permutation(n);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) p.at(cycle[k]) = cycle[(k + 1) % cycle.size()];
  }
  if (std::set<int>(p.begin(), p.end()).size() != p.size()) {
    throw std::invalid_argument("from_cycles: cycles are not disjoint");
  }
  return p;
}

std::vector<int> adjacent_transposition_walk(int n) {
  std::vector<int> walk;
  if (n <= 1) return walk;
  walk.reserve(static_cast<std::size_t>(factorial(n) - 1));
  std::vector<int> word = identity_permutation(n);
  std::vector<int> dir(n, -1);
  for (;;) {
    int mobile_pos = -1;
    for (int i = 0; i < n; ++i) {
      const int j = i + dir[word[i]];
      if (j < 0 || j >= n || word[j] > word[i]) continue;
      if (mobile_pos < 0 || word[i] > word[mobile_pos]) mobile_pos = i;
    }
    if (mobile_pos < 0) break;
    const int value = word[mobile_pos];
    const int other = mobile_pos + dir[value];
    walk.push_back(std::min(mobile_pos, other));
    std::swap(word[mobile_pos], word[other]);
    for (int v = value + 1; v < n; ++v) dir[v] = -dir[v];
  }
  return walk;
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// --- Partition --------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  const std::string s(text);
  auto bad = [&s]() { return std::invalid_argument("bad partition '" + s + "'"); };
  std::vector<int> parts;
  if (s.find(',') != std::string::npos) {
    // "3,1,1" or "2^3,1,1".
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto caret = item.find('^');
      const std::string base = item.substr(0, caret);
      const std::string exp = caret == std::string::npos ? "1" : item.substr(caret + 1);
      const auto digits = [](const std::string& t) {
        return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
      };
      if (!digits(base) || !digits(exp)) throw bad();
      parts.insert(parts.end(), std::stoi(exp), std::stoi(base));
    }
    return Partition(std::move(parts));
  }
  // Compact form: one digit per part, optionally followed by a one-digit
  // exponent, so "2^311" is 2,2,2,1,1 and "21^4" is 2,1,1,1,1.
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
    const int part = s[i] - '0';
    int repeat = 1;
    if (i + 1 < s.size() && s[i + 1] == '^') {
      if (i + 2 >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i + 2]))) throw bad();
      repeat = s[i + 2] - '0';
      i += 2;
    }
    parts.insert(parts.end(), repeat, part);
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int i = 1; !parts_.empty() && i <= parts_.front(); ++i) {
    out.push_back(static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [i](int p) { return p >= i; })));
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string Partition::compact() const {
  std::string s;
  for (int p : parts_) s += std::to_string(p);
  return s;
}

namespace {

void partitions_into(int n, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_into(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> memo;
  std::lock_guard lock(mutex);
  auto [it, inserted] = memo.try_emplace(n);
  if (inserted) {
    if (n < 0) throw std::invalid_argument("partitions: negative n");
    std::vector<int> prefix;
    partitions_into(n, n, prefix, it->second);
    std::sort(it->second.begin(), it->second.end());
  }
  return it->second;
}

std::size_t partition_index(const Partition& p) {
  const auto& all = partitions(p.size());
  const auto it = std::lower_bound(all.begin(), all.end(), p);
  return static_cast<std::size_t>(it - all.begin());
}

Partition cycle_type(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

std::int64_t class_size(const Partition& mu) {
  std::int64_t denom = 1;
  for (int part = 1; part <= mu.size(); ++part) {
    const int m = mu.multiplicity(part);
    for (int k = 0; k < m; ++k) denom *= part;
    denom *= factorial(m);
  }
  return factorial(mu.size()) / denom;
}

Permutation class_representative(const Partition& mu) {
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (int part : mu.parts()) {
    std::vector<int> cycle(part);
    std::iota(cycle.begin(), cycle.end(), next);
    next += part;
    cycles.push_back(std::move(cycle));
  }
  return from_cycles(mu.size(), cycles);
}

namespace {

// Murnaghan-Nakayama on beta-sets: removing a border strip of length k moves
// one bead from b to b-k; the sign counts the beads jumped over.
std::int64_t mn_beta(std::vector<int>& beta, const std::vector<int>& mu, std::size_t next_part) {
  if (next_part == mu.size()) return 1;
  const int k = mu[next_part];
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    const auto between = std::count_if(beta.begin(), beta.end(),
                                       [&](int x) { return x > target && x < b; });
    beta[i] = target;
    const std::int64_t sub = mn_beta(beta, mu, next_part + 1);
    beta[i] = b;
    total += (between % 2 == 0 ? sub : -sub);
  }
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("mn_character: size mismatch");
  const int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda.parts()[i] + (len - 1 - i);
  return mn_beta(beta, mu.parts(), 0);
}

std::int64_t hook_dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::int64_t hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts()[i]; ++j) {
      hooks *= (lambda.parts()[i] - j - 1) + (conj.parts()[j] - i - 1) + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

// --- class functions and characters -----------------------------------------

ClassFunction ClassFunction::zero(int n) {
  return ClassFunction{n, std::vector<Rational>(partitions(n).size(), Rational(0))};
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (n != other.n) throw std::invalid_argument("class functions of different S_n");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  if (n != other.n) throw std::invalid_argument("class functions of different S_n");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= other.values[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& s) {
  for (auto& v : values) v *= s;
  return *this;
}

CharacterTable::CharacterTable(int n) : n_(n) {
  const auto& parts = partitions(n);
  const auto k = static_cast<Eigen::Index>(parts.size());
  values_.resize(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) values_(i, j) = mn_character(parts[i], parts[j]);
  }
  for (const auto& mu : parts) class_sizes_.push_back(class_size(mu));
}

std::int64_t CharacterTable::operator()(const Partition& lambda, const Partition& mu) const {
  return values_(static_cast<Eigen::Index>(partition_index(lambda)),
                 static_cast<Eigen::Index>(partition_index(mu)));
}

ClassFunction CharacterTable::character(const Partition& lambda) const {
  ClassFunction f = ClassFunction::zero(n_);
  const auto row = static_cast<Eigen::Index>(partition_index(lambda));
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    f.values[j] = Rational(values_(row, static_cast<Eigen::Index>(j)));
  }
  return f;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.n != g.n) throw std::invalid_argument("inner_product: different S_n");
  const auto& parts = partitions(f.n);
  Rational sum = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    sum += Rational(class_size(parts[j])) * f.values[j] * g.values[j];
  }
  return sum / Rational(factorial(f.n));
}

Multiplicities decompose(const ClassFunction& f, const CharacterTable& table, bool allow_virtual) {
  if (f.n != table.n()) throw std::invalid_argument("decompose: table for a different S_n");
  Multiplicities out;
  for (const auto& lambda : table.labels()) {
    const Rational m = inner_product(f, table.character(lambda));
    if (!is_integral(m)) {
      throw NotACharacter("multiplicity of chi_" + lambda.compact() + " is " + m.str());
    }
    if (m < 0 && !allow_virtual) {
      throw NotACharacter("negative multiplicity " + m.str() + " of chi_" + lambda.compact());
    }
    if (m != 0) out.emplace(lambda, boost::multiprecision::numerator(m).convert_to<std::int64_t>());
  }
  return out;
}

Multiplicities decompose(const ClassFunction& f, bool allow_virtual) {
  return decompose(f, CharacterTable(f.n), allow_virtual);
}

ClassFunction character_of(const Multiplicities& m, const CharacterTable& table) {
  ClassFunction f = ClassFunction::zero(table.n());
  for (const auto& [lambda, mult] : m) f += Rational(mult) * table.character(lambda);
  return f;
}

std::string format_decomposition(const Multiplicities& m) {
  if (m.empty()) return "0";
  std::string s;
  // Largest partitions first, the way decompositions are usually written.
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    const auto& [lambda, mult] = *it;
    if (!s.empty()) s += mult < 0 ? " - " : " + ";
    else if (mult < 0) s += "-";
    const auto a = mult < 0 ? -mult : mult;
    if (a != 1) s += std::to_string(a) + " ";
    s += "chi_" + lambda.compact();
  }
  return s;
}

}  // namespace delta2n
