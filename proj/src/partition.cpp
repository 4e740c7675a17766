#include "realiz/partition.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <numeric>

#include "realiz/errors.hpp"

namespace realiz {

namespace {
std::atomic<int> g_part_limit{64};
}

int part_limit() { return g_part_limit.load(std::memory_order_relaxed); }

void set_part_limit(int limit) {
  if (limit < 1) throw Error("part limit must be positive");
  g_part_limit.store(limit, std::memory_order_relaxed);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw NotAPartition("negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw NotAPartition("parts are not weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  if (!parts_.empty() && parts_.front() > part_limit())
    throw InvalidPartition("part " + std::to_string(parts_.front()) + " exceeds the part limit");
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int k) const {
  std::vector<int> out = parts_;
  if (static_cast<int>(out.size()) < k) out.resize(k, 0);
  return out;
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > parts_[i]) return false;
  return true;
}

Partition parse_partition(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') throw SyntaxError("expected '['", pos);
  ++pos;
  std::vector<int> parts;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      skip_ws();
      std::size_t start = pos;
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw InvalidPartition("partition part too large");
        ++pos;
      }
      if (pos == start) throw SyntaxError("expected a nonnegative integer", pos);
      parts.push_back(static_cast<int>(value));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw SyntaxError("expected ',' or ']'", pos);
    }
  }
  skip_ws();
  if (pos != text.size()) throw SyntaxError("trailing characters after partition", pos);
  try {
    return Partition(std::move(parts));
  } catch (const NotAPartition& e) {
    throw InvalidPartition(std::string(text) + ": " + e.what());
  }
}

GrassmannianSpec::GrassmannianSpec(int k, int n) : k_(k), n_(n) {
  if (k < 1 || k > n - 1)
    throw InvalidSpace("G(" + std::to_string(k) + "," + std::to_string(n) + ") needs 1 <= k <= n-1");
}

Partition GrassmannianSpec::full_box() const { return Partition(std::vector<int>(k_, corank())); }

std::string GrassmannianSpec::str() const {
  return "G(" + std::to_string(k_) + "," + std::to_string(n_) + ")";
}

bool validate_partition(const Partition& lambda, const GrassmannianSpec& g) {
  return lambda.length() <= g.k() && lambda[0] <= g.corank();
}

Partition transpose(const Partition& lambda) {
  std::vector<int> out(lambda[0], 0);
  for (int part : lambda.parts())
    for (int c = 0; c < part; ++c) ++out[c];
  return Partition(std::move(out));
}

Partition complement(const Partition& lambda, const GrassmannianSpec& g) {
  if (!validate_partition(lambda, g))
    throw InvalidPartition(lambda.str() + " does not fit the box of " + g.str());
  std::vector<int> out(g.k());
  for (int i = 0; i < g.k(); ++i) out[i] = g.corank() - lambda[g.k() - 1 - i];
  return Partition(std::move(out));
}

Partition shift(const Partition& lambda, int s, int j) {
  if (s < 0 || j < 0) throw NotAPartition("shift needs nonnegative s and j");
  std::vector<int> out = lambda.padded(j);
  for (int i = 0; i < j; ++i) out[i] += s;
  return Partition(std::move(out));
}

Partition prepend(const Partition& lambda, int v, int t) {
  if (v < 0 || t < 0) throw NotAPartition("prepend needs nonnegative v and t");
  if (t > 0 && v < lambda[0])
    throw NotAPartition("cannot prepend " + std::to_string(v) + " to " + lambda.str());
  std::vector<int> out(t, v);
  out.insert(out.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(std::move(out));
}

namespace {

void enumerate_rec(int remaining, int max_part, int slots, std::vector<int>& current,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (slots == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    if (static_cast<long>(part) * slots < remaining) break;
    current.push_back(part);
    enumerate_rec(remaining - part, part, slots - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_lambda(int r, const GrassmannianSpec& g) {
  std::vector<Partition> out;
  if (r < 0 || r > g.dim()) return out;
  std::vector<int> current;
  enumerate_rec(r, g.corank(), g.k(), current, out);
  return out;
}

std::vector<Partition> box_partitions(const GrassmannianSpec& g) {
  std::vector<Partition> out;
  for (int r = 0; r <= g.dim(); ++r) {
    auto level = enumerate_lambda(r, g);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<PartBlock> grouped_form(const Partition& lambda, int k) {
  std::vector<PartBlock> blocks;
  for (int part : lambda.padded(k)) {
    if (!blocks.empty() && blocks.back().value == part)
      ++blocks.back().multiplicity;
    else
      blocks.push_back({part, 1});
  }
  return blocks;
}

}  // namespace realiz
