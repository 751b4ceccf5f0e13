#include "intransitive/die.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace intransitive {

std::string to_string(Model model) {
  return model == Model::balanced_sequence ? "balanced" : "multiset";
}

Model model_from_string(const std::string& name) {
  if (name == "balanced" || name == "balanced_sequence") return Model::balanced_sequence;
  if (name == "multiset" || name == "multiset_canonical") return Model::multiset_canonical;
  throw std::invalid_argument("unknown model '" + name + "' (expected balanced or multiset)");
}

std::int64_t target_sum(int n) { return static_cast<std::int64_t>(n) * (n + 1) / 2; }

namespace {

// Counting sort; faces are already known to lie in [1, n].
std::vector<int> sorted_copy(const std::vector<int>& faces) {
  const int n = static_cast<int>(faces.size());
  std::vector<int> counts(n + 1, 0);
  for (int f : faces) ++counts[f];
  std::vector<int> out;
  out.reserve(faces.size());
  for (int v = 1; v <= n; ++v) out.insert(out.end(), counts[v], v);
  return out;
}

}  // namespace

Die::Die(std::vector<int> faces, Model model) : faces_(std::move(faces)), model_(model) {
  const int n = static_cast<int>(faces_.size());
  if (n == 0) throw std::invalid_argument("die must have at least one face");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const int f = faces_[i];
    if (f < 1 || f > n) {
      throw std::invalid_argument("face " + std::to_string(f) + " at position " + std::to_string(i) +
                                  " out of range [1," + std::to_string(n) + "]");
    }
    sum += f;
  }
  if (sum != target_sum(n)) {
    throw std::invalid_argument("sum " + std::to_string(sum) + " != " + std::to_string(target_sum(n)) +
                                " required for n=" + std::to_string(n));
  }
  sorted_ = sorted_copy(faces_);
  if (model_ == Model::multiset_canonical) faces_ = sorted_;
}

Die Die::standard(int n, Model model) {
  std::vector<int> faces(n);
  for (int i = 0; i < n; ++i) faces[i] = i + 1;
  return Die(std::move(faces), model);
}

std::vector<int> Die::histogram() const {
  std::vector<int> counts(faces_.size() + 1, 0);
  for (int f : faces_) ++counts[f];
  return counts;
}

std::string to_string(const Die& die) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < die.sides(); ++i) {
    if (i) os << ',';
    os << die.faces()[i];
  }
  os << ')';
  return os.str();
}

Die parse_die(const std::string& text, Model model) {
  std::vector<int> faces;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("bad face value '" + token + "'");
    faces.push_back(value);
  }
  return Die(std::move(faces), model);
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::a_wins:
      return "a_wins";
    case Verdict::b_wins:
      return "b_wins";
    case Verdict::tie:
      return "tie";
  }
  return "tie";
}

namespace {

void require_same_sides(const Die& a, const Die& b, const char* what) {
  if (a.sides() != b.sides()) {
    throw std::invalid_argument(std::string(what) + ": dice have different side counts (" +
                                std::to_string(a.sides()) + " vs " + std::to_string(b.sides()) + ")");
  }
}

Verdict verdict_of(std::int64_t greater, std::int64_t less) {
  if (greater > less) return Verdict::a_wins;
  if (greater < less) return Verdict::b_wins;
  return Verdict::tie;
}

}  // namespace

BeatOutcome beats(const Die& a, const Die& b) {
  require_same_sides(a, b, "beats");
  const auto sa = a.sorted_faces();
  const auto sb = b.sorted_faces();
  const std::size_t n = sa.size();

  BeatOutcome out;
  // Walk runs of equal values in A; jb counts faces of B strictly below the run value.
  std::size_t ia = 0, jb = 0;
  while (ia < n) {
    const int v = sa[ia];
    std::size_t run_a = 0;
    while (ia < n && sa[ia] == v) {
      ++ia;
      ++run_a;
    }
    while (jb < n && sb[jb] < v) ++jb;
    std::size_t eq_end = jb;
    while (eq_end < n && sb[eq_end] == v) ++eq_end;
    const auto below = static_cast<std::int64_t>(jb);
    const auto same = static_cast<std::int64_t>(eq_end - jb);
    const auto above = static_cast<std::int64_t>(n - eq_end);
    out.greater += static_cast<std::int64_t>(run_a) * below;
    out.equal += static_cast<std::int64_t>(run_a) * same;
    out.less += static_cast<std::int64_t>(run_a) * above;
  }
  out.verdict = verdict_of(out.greater, out.less);
  return out;
}

BeatOutcome beats_reference(const Die& a, const Die& b) {
  require_same_sides(a, b, "beats_reference");
  BeatOutcome out;
  for (int x : a.faces()) {
    for (int y : b.faces()) {
      if (x > y)
        ++out.greater;
      else if (x < y)
        ++out.less;
      else
        ++out.equal;
    }
  }
  out.verdict = verdict_of(out.greater, out.less);
  return out;
}

namespace {

void require_index(const Die& die, int j, const char* what) {
  if (j < 1 || j > die.sides()) {
    throw std::out_of_range(std::string(what) + ": j=" + std::to_string(j) + " outside [1," +
                            std::to_string(die.sides()) + "]");
  }
}

}  // namespace

HalfInteger f_of(const Die& die, int j) {
  require_index(die, j, "f_of");
  std::int64_t twice = 0;
  for (int a : die.faces()) {
    if (a < j)
      twice += 2;
    else if (a == j)
      twice += 1;
  }
  return HalfInteger::from_doubled(twice);
}

HalfInteger g_of(const Die& die, int j) {
  require_index(die, j, "g_of");
  return HalfInteger::from_doubled(f_of(die, j).doubled() - 2 * j + 1);
}

std::vector<std::int64_t> g_table_doubled(const Die& die) {
  const int n = die.sides();
  const auto counts = die.histogram();
  std::vector<std::int64_t> table(n);
  std::int64_t below = 0;
  for (int j = 1; j <= n; ++j) {
    table[j - 1] = 2 * below + counts[j] - 2 * j + 1;
    below += counts[j];
  }
  return table;
}

HalfInteger score_sum(const Die& a, const Die& b) {
  require_same_sides(a, b, "score_sum");
  const auto g = g_table_doubled(a);
  std::int64_t twice = 0;
  for (int face : b.faces()) twice += g[face - 1];
  return HalfInteger::from_doubled(twice);
}

Verdict verdict_from_score(HalfInteger score) {
  if (score.doubled() < 0) return Verdict::a_wins;
  if (score.doubled() > 0) return Verdict::b_wins;
  return Verdict::tie;
}

Die complement(const Die& die) {
  const int n = die.sides();
  std::vector<int> faces(die.faces().begin(), die.faces().end());
  for (int& f : faces) f = n + 1 - f;
  return Die(std::move(faces), die.model());
}

}  // namespace intransitive
