#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace frechet {

struct WeightUpdate {
  int col = 0;
  int row = 0;
  std::uint8_t weight = 0;
};

/// st-reachability engine for a weight lattice with edges (c,r) -> (c+1,r),
/// (c,r+1), (c+1,r+1) over activated vertices, under single-vertex weight
/// updates. The offline variant answers after every update in one call.
/// Instrumentation counters let callers report measured update/query costs.
class ReachabilityBackend {
public:
  virtual ~ReachabilityBackend() = default;

  virtual void init(int cols, int rows, const std::vector<std::uint8_t>& weights) = 0;
  virtual void set_weight(int col, int row, bool w) = 0;
  virtual bool query() = 0;

  /// Decision i of the result equals the answer after updates[0..i].
  virtual std::vector<bool> offline_process(int cols, int rows,
                                            const std::vector<std::uint8_t>& weights,
                                            const std::vector<WeightUpdate>& updates) {
    init(cols, rows, weights);
    std::vector<bool> out;
    out.reserve(updates.size() + 1);
    out.push_back(query());
    for (const WeightUpdate& u : updates) {
      set_weight(u.col, u.row, u.weight != 0);
      out.push_back(query());
    }
    return out;
  }

  std::uint64_t update_count() const { return updates_; }
  std::uint64_t query_count() const { return queries_; }
  std::uint64_t cells_visited() const { return visited_; }
  void reset_counters() { updates_ = queries_ = visited_ = 0; }

protected:
  std::uint64_t updates_ = 0;
  std::uint64_t queries_ = 0;
  std::uint64_t visited_ = 0;
};

/// Correctness baseline: a full monotone DP pass per query, Theta(N^2).
class BaselineBackend final : public ReachabilityBackend {
public:
  void init(int cols, int rows, const std::vector<std::uint8_t>& weights) override {
    if (cols <= 0 || rows <= 0 || weights.size() != std::size_t(cols) * rows)
      throw std::invalid_argument("BaselineBackend: bad dimensions");
    cols_ = cols;
    rows_ = rows;
    w_ = weights;
    reach_.assign(w_.size(), 0);
  }

  void set_weight(int col, int row, bool w) override {
    check_range(col, row);
    w_[idx(col, row)] = w ? 1 : 0;
    ++updates_;
  }

  bool query() override {
    ++queries_;
    visited_ += w_.size();
    for (int c = 0; c < cols_; ++c)
      for (int r = 0; r < rows_; ++r) {
        std::uint8_t v = 0;
        if (w_[idx(c, r)]) {
          if (c == 0 && r == 0)
            v = 1;
          else if (c > 0 && reach_[idx(c - 1, r)])
            v = 1;
          else if (r > 0 && reach_[idx(c, r - 1)])
            v = 1;
          else if (c > 0 && r > 0 && reach_[idx(c - 1, r - 1)])
            v = 1;
        }
        reach_[idx(c, r)] = v;
      }
    return reach_[idx(cols_ - 1, rows_ - 1)] != 0;
  }

  bool weight_at(int col, int row) const { return w_[idx(col, row)] != 0; }

private:
  std::size_t idx(int col, int row) const { return std::size_t(col) * rows_ + row; }
  void check_range(int col, int row) const {
    if (col < 0 || col >= cols_ || row < 0 || row >= rows_)
      throw std::out_of_range("BaselineBackend: coordinates out of range");
  }

  int cols_ = 0;
  int rows_ = 0;
  std::vector<std::uint8_t> w_;
  std::vector<std::uint8_t> reach_;
};

inline std::unique_ptr<ReachabilityBackend> make_backend(const std::string& name) {
  if (name == "baseline") return std::make_unique<BaselineBackend>();
  throw std::invalid_argument("unknown backend: " + name);
}

}  // namespace frechet
