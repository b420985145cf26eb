#include "catpart/partition.hpp"

#include "catpart/counting.hpp"
#include "catpart/error.hpp"

#include <charconv>

namespace catpart {
namespace {

void check_cap(const ExactInteger& predicted, std::uint64_t cap, const char* what) {
  if (predicted > cap) {
    throw cap_exceeded(std::string(what) + ": " + counting::to_decimal(predicted) +
                       " structures exceed the enumeration cap of " + std::to_string(cap));
  }
}

// Appends every weakly decreasing completion of `prefix` to length n with parts <= ceiling.
template <typename Emit>
void decreasing_sequences(std::vector<int>& prefix, std::size_t n, int ceiling, int floor,
                          Emit&& emit) {
  if (prefix.size() == n) {
    emit(prefix);
    return;
  }
  for (int v = ceiling; v >= floor; --v) {
    prefix.push_back(v);
    decreasing_sequences(prefix, n, v, floor, emit);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw invalid_argument("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw invalid_argument("partition parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw invalid_argument("partition parts must be weakly decreasing: " + to_string());
    }
  }
}

int Partition::operator()(std::size_t i) const {
  if (i < 1 || i > parts_.size()) {
    throw invalid_argument("partition index " + std::to_string(i) + " outside [1, " +
                           std::to_string(parts_.size()) + "]");
  }
  return parts_[i - 1];
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

BoundedPartition::BoundedPartition(Partition partition, int bound)
    : partition_(std::move(partition)), bound_(bound) {
  if (bound_ < 1) throw invalid_argument("partition bound must be positive");
  if (partition_.first() > bound_) {
    throw invalid_argument("partition " + partition_.to_string() + " has a part exceeding bound " +
                           std::to_string(bound_));
  }
}

BoundedPartition::BoundedPartition(std::vector<int> parts, int bound)
    : BoundedPartition(Partition(std::move(parts)), bound) {}

SquarePartition::SquarePartition(BoundedPartition value) : value_(std::move(value)) {
  if (!is_square(value_)) {
    throw invalid_argument("not a square partition (k parts, largest k, smallest 1): " +
                           value_.to_string() + " with bound " + std::to_string(value_.bound()));
  }
}

SquarePartition::SquarePartition(std::vector<int> parts)
    : SquarePartition(BoundedPartition(parts, static_cast<int>(parts.size()))) {}

int gamma(int m, int i) {
  if (m < 1 || i < 1 || i > m) {
    throw invalid_argument("gamma: index " + std::to_string(i) + " outside [1, " +
                           std::to_string(m) + "]");
  }
  return m + 1 - i;
}

BoundedPartition tau(const BoundedPartition& mu) {
  const int k = mu.bound();
  std::vector<int> out(mu.parts().rbegin(), mu.parts().rend());
  for (int& v : out) v = k + 1 - v;
  return {std::move(out), k};
}

SquarePartition tau(const SquarePartition& lambda) { return SquarePartition(tau(lambda.value())); }

bool is_square(const BoundedPartition& mu) {
  const auto n = static_cast<int>(mu.size());
  return n == mu.bound() && mu.first() == n && mu.last() == 1;
}

bool is_self_dual(const SquarePartition& lambda) { return tau(lambda) == lambda; }

std::vector<BoundedPartition> enumerate_pnk(int n, int k, std::uint64_t cap) {
  if (n < 1 || k < 1) throw invalid_argument("enumerate_pnk: n and k must be positive");
  check_cap(counting::binomial(n + k - 1, n), cap, "enumerate_pnk");
  std::vector<BoundedPartition> out;
  std::vector<int> prefix;
  decreasing_sequences(prefix, static_cast<std::size_t>(n), k, 1,
                       [&](const std::vector<int>& seq) { out.emplace_back(seq, k); });
  return out;
}

std::vector<SquarePartition> enumerate_square(int k, std::uint64_t cap) {
  if (k < 1) throw invalid_argument("enumerate_square: k must be positive");
  if (k == 1) return {SquarePartition(std::vector<int>{1})};
  check_cap(counting::binomial(2 * k - 3, k - 2), cap, "enumerate_square");
  std::vector<SquarePartition> out;
  std::vector<int> prefix{k};
  decreasing_sequences(prefix, static_cast<std::size_t>(k - 1), k, 1,
                       [&](const std::vector<int>& seq) {
                         auto parts = seq;
                         parts.push_back(1);
                         out.emplace_back(std::move(parts));
                       });
  return out;
}

Partition parse_partition(std::string_view csv) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const auto comma = csv.find(',', pos);
    auto token = csv.substr(pos, comma == std::string_view::npos ? csv.npos : comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\n' ||
                              token.back() == '\r')) {
      token.remove_suffix(1);
    }
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw invalid_argument("cannot parse partition part '" + std::string(token) + "' in '" +
                             std::string(csv) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace catpart
