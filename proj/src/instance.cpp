#include "bqap/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bqap/errors.hpp"
#include "bqap/rng.hpp"

namespace bqap {

namespace {

void check_entries(const IntMatrix& m, const std::string& label) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (m(i, j) < 0)
        throw ValidationError(label + "[" + std::to_string(i) + "][" +
                              std::to_string(j) + "] is negative");
}

std::vector<std::int64_t> tokenize_integers(std::istream& text) {
  std::vector<std::int64_t> tokens;
  std::string word;
  while (text >> word) {
    try {
      std::size_t used = 0;
      const long long value = std::stoll(word, &used);
      if (used != word.size()) throw std::invalid_argument(word);
      tokens.push_back(value);
    } catch (const std::exception&) {
      throw ParseError("non-integer token '" + word + "' at position " +
                       std::to_string(tokens.size() + 1));
    }
  }
  return tokens;
}

} // namespace

void BiQapInstance::validate() const {
  if (n < 2) throw ValidationError("instance size must be at least 2, got " + std::to_string(n));
  if (distance.size() != n || flow[0].size() != n || flow[1].size() != n)
    throw ValidationError("matrix dimensions do not match n");
  check_entries(distance, "D");
  check_entries(flow[0], "H1");
  check_entries(flow[1], "H2");
}

MatrixOrder parse_matrix_order(const std::string& spec) {
  std::vector<MatrixKind> kinds;
  std::stringstream stream(spec);
  std::string part;
  while (std::getline(stream, part, ',')) {
    if (part == "distance") kinds.push_back(MatrixKind::distance);
    else if (part == "flow1") kinds.push_back(MatrixKind::flow1);
    else if (part == "flow2") kinds.push_back(MatrixKind::flow2);
    else throw ValidationError("unknown matrix name '" + part + "' in order spec");
  }
  if (kinds.size() != 3 ||
      std::count(kinds.begin(), kinds.end(), MatrixKind::distance) != 1 ||
      std::count(kinds.begin(), kinds.end(), MatrixKind::flow1) != 1 ||
      std::count(kinds.begin(), kinds.end(), MatrixKind::flow2) != 1)
    throw ValidationError("matrix order must name distance, flow1 and flow2 exactly once: '" + spec + "'");
  return {kinds[0], kinds[1], kinds[2]};
}

BiQapInstance parse_instance(std::istream& text, const MatrixOrder& order,
                             const std::string& name) {
  const auto tokens = tokenize_integers(text);
  if (tokens.empty()) throw ParseError("empty instance text");

  const std::int64_t n64 = tokens[0];
  if (n64 < 2) throw ValidationError("instance size must be at least 2, got " + std::to_string(n64));
  if (n64 > 10000) throw ValidationError("implausible instance size " + std::to_string(n64));
  const int n = static_cast<int>(n64);

  const std::size_t expected = 1 + 3 * static_cast<std::size_t>(n) * n;
  if (tokens.size() != expected)
    throw ParseError(static_cast<long long>(expected), static_cast<long long>(tokens.size()));

  BiQapInstance instance;
  instance.name = name;
  instance.n = n;
  instance.distance = IntMatrix(n);
  instance.flow[0] = IntMatrix(n);
  instance.flow[1] = IntMatrix(n);

  std::size_t pos = 1;
  for (const MatrixKind kind : order) {
    IntMatrix& target = kind == MatrixKind::distance ? instance.distance
                        : kind == MatrixKind::flow1  ? instance.flow[0]
                                                     : instance.flow[1];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) target(i, j) = tokens[pos++];
  }

  instance.validate();
  return instance;
}

void render_instance(const BiQapInstance& instance, std::ostream& out) {
  out << instance.n << "\n\n";
  const IntMatrix* blocks[3] = {&instance.distance, &instance.flow[0], &instance.flow[1]};
  for (const IntMatrix* block : blocks) {
    for (int i = 0; i < instance.n; ++i) {
      for (int j = 0; j < instance.n; ++j) {
        if (j > 0) out << ' ';
        out << (*block)(i, j);
      }
      out << '\n';
    }
    out << '\n';
  }
}

ReferenceFront parse_front(std::istream& text) {
  std::vector<ReferenceFront::Point> raw;
  std::string line;
  int line_number = 0;
  while (std::getline(text, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::stringstream row(line);
    std::int64_t f1, f2;
    std::string trailing;
    if (!(row >> f1 >> f2) || (row >> trailing))
      throw ParseError("malformed front line " + std::to_string(line_number) + ": '" + line + "'");
    raw.push_back({f1, f2});
  }

  // Non-dominated filter with duplicate removal.
  ReferenceFront front;
  for (const auto& p : raw) {
    bool keep = true;
    for (const auto& q : raw) {
      if (q.f1 <= p.f1 && q.f2 <= p.f2 && (q.f1 < p.f1 || q.f2 < p.f2)) {
        keep = false;
        break;
      }
    }
    if (keep && std::find(front.points.begin(), front.points.end(), p) == front.points.end())
      front.points.push_back(p);
  }
  std::sort(front.points.begin(), front.points.end(),
            [](const auto& a, const auto& b) { return a.f1 < b.f1; });
  return front;
}

void render_front(const ReferenceFront& front, std::ostream& out) {
  for (const auto& p : front.points) out << p.f1 << ' ' << p.f2 << '\n';
}

BiQapInstance load_instance(const std::string& path, const MatrixOrder& order) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open instance file '" + path + "'");
  std::string name = path;
  if (const auto slash = name.find_last_of("/\\"); slash != std::string::npos)
    name = name.substr(slash + 1);
  return parse_instance(file, order, name);
}

ReferenceFront load_front(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open front file '" + path + "'");
  return parse_front(file);
}

void save_instance(const BiQapInstance& instance, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot write instance file '" + path + "'");
  render_instance(instance, file);
  if (!file) throw IoError("write failed for '" + path + "'");
}

namespace {

double offdiag_correlation(const IntMatrix& a, const IntMatrix& b) {
  const int n = a.size();
  double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
  double count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double x = static_cast<double>(a(i, j));
      const double y = static_cast<double>(b(i, j));
      sa += x; sb += y; saa += x * x; sbb += y * y; sab += x * y;
      count += 1;
    }
  const double cov = sab / count - (sa / count) * (sb / count);
  const double va = saa / count - (sa / count) * (sa / count);
  const double vb = sbb / count - (sb / count) * (sb / count);
  if (va <= 0 || vb <= 0) return 0;
  return cov / std::sqrt(va * vb);
}

} // namespace

BiQapInstance synth_instance(int n, double correlation, std::int64_t seed) {
  if (n < 2) throw ValidationError("synthetic instance needs n >= 2, got " + std::to_string(n));
  if (!(correlation >= -1.0 && correlation <= 1.0))
    throw ValidationError("correlation must lie in [-1, 1]");

  constexpr int max_attempts = 16;
  constexpr std::int64_t max_entry = 99;
  const double noise_scale = std::sqrt(1.0 - correlation * correlation);

  Rng rng(static_cast<std::uint64_t>(seed) ^ 0x9e3779b97f4a7c15ULL);

  char rho_text[32];
  std::snprintf(rho_text, sizeof rho_text, "%g", correlation);

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    BiQapInstance instance;
    instance.name = "synth-n" + std::to_string(n) + "-rho" + rho_text +
                    "-seed" + std::to_string(seed);
    instance.n = n;
    instance.distance = IntMatrix(n);
    instance.flow[0] = IntMatrix(n);
    instance.flow[1] = IntMatrix(n);

    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const std::int64_t d = rng.uniform_int(0, max_entry);
        instance.distance(i, j) = d;
        instance.distance(j, i) = d;
      }

    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const std::int64_t h1 = rng.uniform_int(0, max_entry);
        const double noise = noise_scale * static_cast<double>(rng.uniform_int(0, max_entry));
        // A negative target would push rho*h1 below zero and clamping the
        // result would wash the correlation out, so couple to the mirrored
        // entry instead; the shift leaves the correlation untouched.
        const double base = correlation >= 0
                                ? correlation * static_cast<double>(h1)
                                : -correlation * static_cast<double>(max_entry - h1);
        const std::int64_t h2 =
            std::max<std::int64_t>(0, std::llround(base + noise));
        instance.flow[0](i, j) = h1;
        instance.flow[1](i, j) = h2;
      }

    const double achieved = offdiag_correlation(instance.flow[0], instance.flow[1]);
    if (std::abs(achieved - correlation) <= 0.15) {
      instance.validate();
      return instance;
    }
  }
  throw GenerationError("could not reach correlation " + std::to_string(correlation) +
                        " within 0.15 after " + std::to_string(max_attempts) + " attempts");
}

} // namespace bqap
