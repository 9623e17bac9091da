#include "chromsym/tabloid.hpp"

#include "chromsym/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace chromsym {

int RimHook::north_steps() const noexcept {
  int count = 0;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    if (cells[i].row != cells[i - 1].row) ++count;
  }
  return count;
}

std::string RimHook::steps() const {
  std::string out;
  for (std::size_t i = 1; i < cells.size(); ++i) out += cells[i].row != cells[i - 1].row ? 'N' : 'E';
  return out;
}

int SRHTabloid::north_steps() const noexcept {
  int total = 0;
  for (const auto& h : hooks) total += h.north_steps();
  return total;
}

int SRHTabloid::sign() const noexcept { return north_steps() % 2 ? -1 : 1; }

Composition SRHTabloid::content() const {
  std::vector<int> lengths;
  lengths.reserve(hooks.size());
  for (const auto& h : hooks) lengths.push_back(h.length());
  return Composition(std::move(lengths));
}

namespace {

// rows[r-1] is the current length of row r.
void peel(std::vector<int>& rows, std::vector<RimHook>& hooks, const Partition& shape,
          std::vector<SRHTabloid>& out) {
  if (rows.empty()) {
    out.push_back({shape, hooks});
    return;
  }
  const int bottom = static_cast<int>(rows.size());
  RimHook hook;
  int r = bottom, c = 1;
  hook.cells.push_back({r, c});
  while (true) {
    if (c == rows[static_cast<std::size_t>(r - 1)]) {
      // The strip ending at the end of row r is removable.
      std::vector<int> next(rows.begin(), rows.begin() + (r - 1));
      for (int i = r; i < bottom; ++i) next.push_back(rows[static_cast<std::size_t>(i)] - 1);
      while (!next.empty() && next.back() == 0) next.pop_back();
      hooks.push_back(hook);
      peel(next, hooks, shape, out);
      hooks.pop_back();
      if (r == 1) break;
      --r;
    } else {
      ++c;
    }
    hook.cells.push_back({r, c});
  }
}

}  // namespace

std::vector<SRHTabloid> enumerate_srh_tabloids(const Partition& shape) {
  std::vector<SRHTabloid> out;
  std::vector<int> rows = shape.parts();
  std::vector<RimHook> hooks;
  peel(rows, hooks, shape, out);
  return out;
}

BigInt signed_tabloid_count(const Partition& shape, const Partition& content_type) {
  if (shape.n() != content_type.n()) return 0;
  BigInt total = 0;
  for (const auto& t : enumerate_srh_tabloids(shape)) {
    if (sort_to_partition(t.content()) == content_type) total += t.sign();
  }
  return total;
}

HeadTail tail_head_split(const SRHGTabloid& tabloid) {
  HeadTail out;
  const Partition& shape = tabloid.tabloid.shape;
  for (int r = shape.length(); r >= 1 && shape.part(r) == 1; --r) {
    out.tail.vertices.push_back(tabloid.vertex_at({r, 1}));
  }
  for (int r = 1; r <= shape.length() && shape.part(r) > 1; ++r) {
    for (int c = 1; c <= shape.part(r); ++c) out.head.push_back({r, c});
  }
  return out;
}

namespace {

class GTabloidFiller {
 public:
  GTabloidFiller(const Graph& graph, const Poset& order, const SRHTabloid& tabloid, TailFilter filter)
      : graph_(graph), order_(order), tabloid_(tabloid), filter_(filter) {
    const Partition& shape = tabloid.shape;
    grid_.resize(static_cast<std::size_t>(shape.length()));
    for (int r = 1; r <= shape.length(); ++r) {
      grid_[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(shape.part(r)), -1);
    }
  }

  /// A hook covering two tail cells forces an ascent in the tail.
  bool tail_feasible() const {
    if (filter_ == TailFilter::All) return true;
    for (const auto& h : tabloid_.hooks) {
      int tail_cells = 0;
      for (const auto& cell : h.cells) tail_cells += in_tail(cell) ? 1 : 0;
      if (tail_cells > 1) return false;
    }
    return true;
  }

  template <typename OnFilled>
  void run(OnFilled& on_filled) {
    fill_hook(0, all_vertices(graph_.size()), on_filled);
  }

  const std::vector<std::vector<int>>& grid() const { return grid_; }

 private:
  bool in_tail(Cell cell) const { return tabloid_.shape.part(cell.row) == 1; }

  template <typename OnFilled>
  void fill_hook(std::size_t h, VertexSet unused, OnFilled& on_filled) {
    if (h == tabloid_.hooks.size()) {
      on_filled(grid_);
      return;
    }
    fill_cell(h, 0, unused, unused, on_filled);
  }

  // `allowed`: unused vertices strictly above the previous cell's vertex and
  // non-adjacent to every vertex already in this hook.
  template <typename OnFilled>
  void fill_cell(std::size_t h, std::size_t i, VertexSet unused, VertexSet allowed, OnFilled& on_filled) {
    const RimHook& hook = tabloid_.hooks[h];
    if (i == hook.cells.size()) {
      fill_hook(h + 1, unused, on_filled);
      return;
    }
    const Cell cell = hook.cells[i];
    const bool check_tail = filter_ == TailFilter::NonIncreasing && in_tail(cell) &&
                            cell.row < tabloid_.shape.length();
    const int below = check_tail ? grid_[static_cast<std::size_t>(cell.row)][0] : -1;
    for (VertexSet rest = allowed; rest; rest &= rest - 1) {
      const int v = lowest(rest);
      if (check_tail && order_.leq(below, v)) continue;
      grid_[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - 1)] = v;
      const VertexSet next_unused = unused & ~bit(v);
      const VertexSet next_allowed = allowed & ~bit(v) & order_.up(v) & ~graph_.neighbors(v);
      fill_cell(h, i + 1, next_unused, i + 1 == hook.cells.size() ? next_unused : next_allowed,
                on_filled);
    }
    grid_[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - 1)] = -1;
  }

  const Graph& graph_;
  const Poset& order_;
  const SRHTabloid& tabloid_;
  TailFilter filter_;
  std::vector<std::vector<int>> grid_;
};

void check_inputs(const Graph& graph, const Poset& order, const Partition& shape) {
  if (order.size() != graph.size()) {
    throw Error(ErrorCode::OrderIncompatible, "order and graph sizes differ");
  }
  if (!order_compatible(graph, order)) {
    throw Error(ErrorCode::OrderIncompatible, "a non-adjacent pair is incomparable");
  }
  if (shape.n() != graph.size()) {
    throw Error(ErrorCode::SizeMismatch,
                "shape " + shape.to_string() + " vs " + std::to_string(graph.size()) + " vertices");
  }
}

}  // namespace

void for_each_srh_g_tabloid(const Graph& graph, const Poset& order, const Partition& shape,
                            const std::function<void(const SRHGTabloid&)>& visit, TailFilter filter) {
  check_inputs(graph, order, shape);
  for (const auto& t : enumerate_srh_tabloids(shape)) {
    GTabloidFiller filler(graph, order, t, filter);
    if (!filler.tail_feasible()) continue;
    auto emit = [&](const std::vector<std::vector<int>>& grid) { visit(SRHGTabloid{t, grid}); };
    filler.run(emit);
  }
}

std::vector<SRHGTabloid> enumerate_srh_g_tabloids(const Graph& graph, const Poset& order,
                                                  const Partition& shape, TailFilter filter) {
  std::vector<SRHGTabloid> out;
  for_each_srh_g_tabloid(graph, order, shape, [&](const SRHGTabloid& t) { out.push_back(t); }, filter);
  return out;
}

SignedCount count_srh_g_tabloids(const Graph& graph, const Poset& order, const Partition& shape,
                                 TailFilter filter) {
  check_inputs(graph, order, shape);
  SignedCount out;
  for (const auto& t : enumerate_srh_tabloids(shape)) {
    GTabloidFiller filler(graph, order, t, filter);
    if (!filler.tail_feasible()) continue;
    std::uint64_t fillings = 0;
    auto tally = [&](const std::vector<std::vector<int>>&) { ++fillings; };
    filler.run(tally);
    (t.sign() > 0 ? out.positive : out.negative) += fillings;
  }
  return out;
}

bool is_valid_srh_g_tabloid(const SRHGTabloid& tabloid, const Graph& graph, const Poset& order) {
  const Partition& shape = tabloid.tabloid.shape;
  if (shape.n() != graph.size() || order.size() != graph.size()) return false;
  if (static_cast<int>(tabloid.grid.size()) != shape.length()) return false;
  for (int r = 1; r <= shape.length(); ++r) {
    if (static_cast<int>(tabloid.grid[static_cast<std::size_t>(r - 1)].size()) != shape.part(r)) return false;
  }

  // Filling is a bijection onto V(G).
  VertexSet seen = 0;
  for (const auto& row : tabloid.grid) {
    for (int v : row) {
      if (v < 0 || v >= graph.size() || (seen & bit(v))) return false;
      seen |= bit(v);
    }
  }

  // Remove hooks one at a time; each must be a connected special strip whose
  // removal leaves a partition diagram.
  std::set<Cell> remaining;
  for (const auto& cell : Diagram(shape).cells()) remaining.insert(cell);
  for (const auto& hook : tabloid.tabloid.hooks) {
    if (hook.cells.empty() || hook.cells.front().col != 1) return false;
    for (std::size_t i = 0; i < hook.cells.size(); ++i) {
      const Cell cell = hook.cells[i];
      if (!remaining.count(cell)) return false;
      if (i > 0) {
        const Cell prev = hook.cells[i - 1];
        const bool north = cell.row == prev.row - 1 && cell.col == prev.col;
        const bool east = cell.row == prev.row && cell.col == prev.col + 1;
        if (!north && !east) return false;
      }
    }
    for (const auto& cell : hook.cells) remaining.erase(cell);
    // Remaining cells must form a left-justified weakly decreasing diagram.
    std::map<int, int> row_len;
    for (const auto& cell : remaining) ++row_len[cell.row];
    int prev_len = -1, expected_row = 1;
    for (auto [row, len] : row_len) {
      if (row != expected_row++) return false;
      if (prev_len >= 0 && len > prev_len) return false;
      for (int c = 1; c <= len; ++c) {
        if (!remaining.count({row, c})) return false;
      }
      prev_len = len;
    }
    // Rim condition: no hook cell has a cell of the pre-removal diagram to its southeast.
    for (const auto& cell : hook.cells) {
      if (remaining.count({cell.row + 1, cell.col + 1})) return false;
    }
    std::vector<int> vertices;
    for (const auto& cell : hook.cells) vertices.push_back(tabloid.vertex_at(cell));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (graph.adjacent(vertices[i], vertices[j])) return false;
      }
      if (i + 1 < vertices.size() && !order.less(vertices[i], vertices[i + 1])) return false;
    }
  }
  return remaining.empty();
}

SRHGTabloid psi_involution(const SRHGTabloid& tabloid, const Poset& order) {
  const auto split = tail_head_split(tabloid);
  const auto& ts = split.tail.vertices;
  std::size_t j = 0;
  while (j + 1 < ts.size() && !order.leq(ts[j], ts[j + 1])) ++j;
  if (j + 1 >= ts.size()) throw Error(ErrorCode::NoAscent, "tail sequence is non-increasing");

  const int bottom = tabloid.tabloid.shape.length();
  const Cell lower{bottom - static_cast<int>(j), 1};
  const Cell upper{lower.row - 1, 1};

  SRHGTabloid out = tabloid;
  auto& hooks = out.tabloid.hooks;
  std::size_t h = 0;
  while (h < hooks.size() && hooks[h].cells.front() != lower) ++h;
  if (h == hooks.size()) {
    throw std::logic_error("psi: the first ascent does not start a hook");
  }
  if (hooks[h].cells.size() > 1 && hooks[h].cells[1] == upper) {
    // The north step is present: cut it.
    RimHook rest{std::vector<Cell>(hooks[h].cells.begin() + 1, hooks[h].cells.end())};
    hooks[h].cells.resize(1);
    hooks.insert(hooks.begin() + static_cast<std::ptrdiff_t>(h) + 1, std::move(rest));
  } else {
    if (hooks[h].cells.size() != 1 || h + 1 == hooks.size() || hooks[h + 1].cells.front() != upper) {
      throw std::logic_error("psi: unexpected hook layout around the first ascent");
    }
    hooks[h].cells.insert(hooks[h].cells.end(), hooks[h + 1].cells.begin(), hooks[h + 1].cells.end());
    hooks.erase(hooks.begin() + static_cast<std::ptrdiff_t>(h) + 1);
  }
  return out;
}

namespace {

std::vector<std::string> hook_letters(const SRHTabloid& t) {
  std::vector<std::string> rows;
  for (int r = 1; r <= t.shape.length(); ++r) rows.emplace_back(static_cast<std::size_t>(t.shape.part(r)), '?');
  for (std::size_t h = 0; h < t.hooks.size(); ++h) {
    const char letter = h < 26 ? static_cast<char>('a' + h) : static_cast<char>('A' + (h - 26) % 26);
    for (const auto& cell : t.hooks[h].cells) {
      rows[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - 1)] = letter;
    }
  }
  return rows;
}

std::string header(const SRHTabloid& t) {
  std::ostringstream out;
  out << "sign=" << (t.sign() > 0 ? "+1" : "-1") << " content=" << t.content().to_string() << " hooks=";
  for (std::size_t h = 0; h < t.hooks.size(); ++h) {
    if (h) out << ',';
    const auto word = t.hooks[h].steps();
    out << (word.empty() ? "." : word);
  }
  return out.str();
}

}  // namespace

std::string render_ascii(const SRHTabloid& tabloid) {
  std::string out = header(tabloid) + "\n";
  for (const auto& row : hook_letters(tabloid)) out += row + "\n";
  return out;
}

std::string render_ascii(const SRHGTabloid& tabloid, const std::vector<std::string>& labels) {
  std::string out = header(tabloid.tabloid) + "\n";
  const auto letters = hook_letters(tabloid.tabloid);
  std::size_t width = 1;
  for (const auto& l : labels) width = std::max(width, l.size());
  for (std::size_t r = 0; r < letters.size(); ++r) {
    out += letters[r];
    out += std::string(static_cast<std::size_t>(tabloid.tabloid.shape.largest()) - letters[r].size() + 2, ' ');
    for (std::size_t c = 0; c < tabloid.grid[r].size(); ++c) {
      const int v = tabloid.grid[r][c];
      std::string label = v >= 0 && static_cast<std::size_t>(v) < labels.size() ? labels[static_cast<std::size_t>(v)]
                                                                              : std::to_string(v);
      if (c) out += ' ';
      out += label + std::string(width - std::min(width, label.size()), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

}  // namespace chromsym
