#include "chromsym/partition.hpp"

#include "chromsym/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace chromsym {

namespace {

std::string join(const std::vector<int>& parts, char open, char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  out += close;
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw Error(ErrorCode::InvalidPartition, "non-positive part in " + join(parts_, '(', ')'));
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw Error(ErrorCode::InvalidPartition, "parts not weakly decreasing in " + join(parts_, '(', ')'));
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_runs(std::initializer_list<std::pair<int, int>> runs) {
  std::vector<int> parts;
  for (auto [value, count] : runs) parts.insert(parts.end(), static_cast<std::size_t>(count), value);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::vector<std::pair<int, int>> Partition::runs() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::string Partition::to_string() const { return join(parts_, '(', ')'); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw Error(ErrorCode::InvalidComposition, "non-positive part in " + join(parts_, '[', ']'));
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::to_string() const { return join(parts_, '[', ']'); }

std::vector<Cell> Diagram::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(shape_.n()));
  for (int r = 1; r <= shape_.length(); ++r) {
    for (int c = 1; c <= shape_.part(r); ++c) out.push_back({r, c});
  }
  return out;
}

Partition sort_to_partition(const Composition& kappa) {
  std::vector<int> parts = kappa.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) {
    throw Error(ErrorCode::UnequalWeight, lambda.to_string() + " vs " + mu.to_string());
  }
  int a = 0, b = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int i = 1; i <= len; ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

bool is_balanced(const Partition& lambda) {
  if (lambda.empty()) throw Error(ErrorCode::EmptyPartition, "balancedness of the empty partition");
  return lambda.largest() <= lambda.smallest() + 1;
}

PartitionIterator::PartitionIterator(int n, int max_part, int max_length)
    : max_part_(max_part), max_length_(max_length), done_(false) {
  if (n < 0) {
    done_ = true;
    return;
  }
  if (n == 0) {
    current_ = Partition();
    return;
  }
  const int top = std::min(max_part, n);
  if (top < 1 || (n + top - 1) / top > max_length) {
    done_ = true;
    return;
  }
  std::vector<int> parts(static_cast<std::size_t>(n / top), top);
  if (n % top) parts.push_back(n % top);
  current_ = Partition(std::move(parts));
}

bool PartitionIterator::advance(std::vector<int>& parts) const {
  int tail_sum = 0;
  for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i) {
    const int v = parts[static_cast<std::size_t>(i)] - 1;
    const int remainder = tail_sum + 1;
    tail_sum += parts[static_cast<std::size_t>(i)];
    if (v < 1) continue;
    if ((remainder + v - 1) / v > max_length_ - (i + 1)) continue;
    parts.resize(static_cast<std::size_t>(i + 1));
    parts.back() = v;
    for (int left = remainder; left > 0; left -= v) parts.push_back(std::min(v, left));
    return true;
  }
  return false;
}

PartitionIterator& PartitionIterator::operator++() {
  if (done_) return *this;
  std::vector<int> parts = current_.parts();
  if (advance(parts)) {
    current_ = Partition(std::move(parts));
  } else {
    done_ = true;
    current_ = Partition();
  }
  return *this;
}

PartitionRange partitions_of(int n, std::optional<int> max_part, std::optional<int> max_length) {
  return PartitionRange(n, max_part.value_or(std::max(n, 0)), max_length.value_or(std::max(n, 0)));
}

std::vector<Partition> all_partitions(int n, std::optional<int> max_part, std::optional<int> max_length) {
  std::vector<Partition> out;
  for (const auto& p : partitions_of(n, max_part, max_length)) out.push_back(p);
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (text.find_first_not_of(" \t,") == std::string::npos) continue;
      throw Error(ErrorCode::ParseError, "empty entry in '" + text + "'");
    }
    auto last = token.find_last_not_of(" \t");
    token = token.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "not an integer '" + token + "'");
    }
    if (used != token.size()) throw Error(ErrorCode::ParseError, "not an integer '" + token + "'");
    if (value < 1) throw Error(ErrorCode::InvalidPartition, "non-positive part " + token);
    parts.push_back(value);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

}  // namespace chromsym
