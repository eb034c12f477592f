// Copyright 2026 The pilab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "pilab/error.hpp"
#include "pilab/measures.hpp"

namespace pilab {
namespace {

constexpr std::uint64_t kChunk = 500;
constexpr std::uint64_t kMaxExhaustive = 50'000'000;

std::uint64_t text_key(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t method_key(const MethodId& m) {
  return (static_cast<std::uint64_t>(m.family) << 8) | static_cast<std::uint64_t>(m.variant);
}

std::size_t method_slot(const MethodId& m) {
  const auto all = all_methods();
  return static_cast<std::size_t>(std::find(all.begin(), all.end(), m) - all.begin());
}

// Winner sets of one electorate, computed on demand and shared by every
// method and comparison of a trial. Cap overflows are remembered as skips.
class Electorate {
 public:
  Electorate(Profile profile, MarginGraph graph, const EvalOptions& opts)
      : profile_(std::move(profile)), graph_(std::move(graph)), opts_(opts) {}

  const Profile& profile() const { return profile_; }
  const MarginGraph& graph() const { return graph_; }

  // Empty optional when the method exceeded the Ranked Pairs cap.
  std::optional<WinnerSet> winners(const MethodId& m) {
    const std::size_t k = method_slot(m);
    if (state_[k] == 0) {
      try {
        sets_[k] = m.margin_based() ? evaluate_margin(m, graph_, opts_)
                                    : evaluate(m, profile_, opts_);
        state_[k] = 1;
      } catch (const RankedPairsCapExceeded&) {
        state_[k] = 2;
      }
    }
    if (state_[k] == 2) return std::nullopt;
    return sets_[k];
  }

 private:
  Profile profile_;
  MarginGraph graph_;
  const EvalOptions& opts_;
  std::array<WinnerSet, 32> sets_{};
  std::array<unsigned char, 32> state_{};
};

Electorate with_coalition(const Electorate& base, const Ranking& ranking, int size,
                          const EvalOptions& opts) {
  Profile joined = concat(base.profile(), coalition_profile(ranking, size));
  MarginGraph graph = base.graph();
  for (int i = 0; i < size; ++i) graph.add_ballot(ranking);
  return Electorate(std::move(joined), std::move(graph), opts);
}

// Runs `count` work items on up to `workers` threads; item i writes only its
// own result slot, so the merged output does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  if (workers <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

class Progress {
 public:
  Progress(const ProgressFn& fn, std::uint64_t total) : fn_(fn), total_(total) {}
  void advance(std::uint64_t k) {
    if (!fn_) return;
    std::lock_guard lock(mutex_);
    done_ += k;
    fn_(done_, total_);
  }

 private:
  const ProgressFn& fn_;
  std::uint64_t total_;
  std::uint64_t done_ = 0;
  std::mutex mutex_;
};

// One grid cell split into work items over (parity, trial range).
struct Cell {
  std::size_t model = 0;
  int candidates = 0;
  int voters = 0;
  double frac = 0.0;
  std::uint64_t trials[2] = {0, 0};
};

struct WorkItem {
  std::size_t cell;
  int parity;
  std::uint64_t begin;
  std::uint64_t end;
};

std::vector<WorkItem> split_work(const std::vector<Cell>& cells) {
  std::vector<WorkItem> items;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (int parity = 0; parity < 2; ++parity) {
      for (std::uint64_t b = 0; b < cells[c].trials[parity]; b += kChunk) {
        items.push_back({c, parity, b, std::min(b + kChunk, cells[c].trials[parity])});
      }
    }
  }
  return items;
}

std::uint64_t sampled_trials(std::uint64_t total, int parity) {
  return parity == 0 ? (total + 1) / 2 : total / 2;
}

std::uint64_t checked_power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > kMaxExhaustive / base) {
      throw InvalidArgument("exhaustive grid too large (more than " +
                            std::to_string(kMaxExhaustive) + " profiles per cell)");
    }
    r *= base;
  }
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<Ranking> all_rankings(int n) {
  std::vector<Candidate> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<Ranking> out;
  do {
    out.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Profile indexed_profile(const std::vector<Ranking>& perms, int voters, std::uint64_t index) {
  std::vector<Ranking> ballots;
  ballots.reserve(voters);
  for (int i = 0; i < voters; ++i) {
    ballots.push_back(perms[index % perms.size()]);
    index /= perms.size();
  }
  return Profile(perms.front().size(), ballots);
}

EstimateRow base_row(const RunConfig& config, Paradigm paradigm, Measure measure,
                     const Cell& cell, const MethodId& method, std::string comparison) {
  EstimateRow row;
  row.paradigm = paradigm;
  row.measure = measure;
  row.model = config.models[cell.model].name();
  row.method = std::string(method.family_name());
  row.variant = std::string(method.variant_name());
  row.comparison = std::move(comparison);
  row.candidates = cell.candidates;
  row.voters = cell.voters;
  row.seed = config.seed;
  if (paradigm == Paradigm::pair) {
    row.coalition_frac = cell.frac;
    row.coalition_size_even = coalition_size(cell.frac, cell.voters);
    row.coalition_size_odd = coalition_size(cell.frac, cell.voters + 1);
  }
  return row;
}

void check_not_all_skipped(const std::vector<EstimateRow>& rows) {
  if (rows.empty()) return;
  for (const auto& r : rows) {
    if (r.tally.trials > r.tally.skipped) return;
  }
  throw Error("every trial was skipped (Ranked Pairs tie-order cap exceeded); raise rp_cap");
}

// Tally slots of one cell: raw/ratio per method, then
// conditional/conditional_ratio per (method, comparison).
struct Layout {
  std::size_t methods;
  std::size_t comparisons;
  std::size_t unconditioned(std::size_t k, bool ratio) const { return 2 * k + ratio; }
  std::size_t conditioned(std::size_t k, std::size_t j, bool ratio) const {
    return 2 * methods + 2 * (k * comparisons + j) + ratio;
  }
  std::size_t size() const { return 2 * methods * (1 + comparisons); }
};

std::vector<EstimateRow> emit_rows(const RunConfig& config, Paradigm paradigm,
                                   const std::vector<Cell>& cells, const Layout& layout,
                                   const std::vector<std::vector<TrialTally>>& tallies) {
  std::vector<EstimateRow> rows;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (std::size_t k = 0; k < layout.methods; ++k) {
      const MethodId& method = config.methods[k];
      for (bool ratio : {false, true}) {
        EstimateRow row = base_row(config, paradigm, ratio ? Measure::ratio : Measure::raw,
                                   cells[c], method, "none");
        row.tally = tallies[c][layout.unconditioned(k, ratio)];
        finalize_estimate(row);
        rows.push_back(std::move(row));
      }
      for (std::size_t j = 0; j < layout.comparisons; ++j) {
        for (bool ratio : {false, true}) {
          EstimateRow row = base_row(
              config, paradigm, ratio ? Measure::conditional_ratio : Measure::conditional,
              cells[c], method, std::string(config.comparisons[j].name()));
          row.tally = tallies[c][layout.conditioned(k, j, ratio)];
          finalize_estimate(row);
          rows.push_back(std::move(row));
        }
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), row_key_less);
  return rows;
}

void add_skip(TrialTally& t) {
  ++t.trials;
  ++t.skipped;
}

void profile_trial(const RunConfig& config, const EvalOptions& opts, const Layout& layout,
                   Electorate& electorate, std::vector<TrialTally>& out) {
  const Profile& profile = electorate.profile();
  for (std::size_t k = 0; k < layout.methods; ++k) {
    const MethodId& method = config.methods[k];
    std::optional<SingleVoterScan> scan;
    try {
      scan = scan_single_voters(method, profile, opts);
    } catch (const RankedPairsCapExceeded&) {
    }
    for (bool ratio : {false, true}) {
      TrialTally& t = out[layout.unconditioned(k, ratio)];
      if (!scan) {
        add_skip(t);
        continue;
      }
      ++t.trials;
      ++t.cond_hits;
      t.num_event += scan->violation;
      ++t.num_base;
      if (ratio) {
        t.den_event += scan->potent;
        ++t.den_base;
      }
    }
    for (std::size_t j = 0; j < layout.comparisons; ++j) {
      std::optional<WinnerSet> other;
      if (scan) other = electorate.winners(config.comparisons[j]);
      for (bool ratio : {false, true}) {
        TrialTally& t = out[layout.conditioned(k, j, ratio)];
        if (!other) {
          add_skip(t);
          continue;
        }
        ++t.trials;
        if (method == config.comparisons[j] || *other == scan->winners) continue;
        ++t.cond_hits;
        t.num_event += scan->violation;
        ++t.num_base;
        if (ratio) {
          t.den_event += scan->potent;
          ++t.den_base;
        }
      }
    }
  }
}

}  // namespace

std::vector<EstimateRow> run_profile_paradigm(const RunConfig& config,
                                              const ProgressFn& progress) {
  config.validate();
  const EvalOptions opts{config.rp_cap};
  const Layout layout{config.methods.size(), config.comparisons.size()};

  std::vector<Cell> cells;
  for (std::size_t mi = 0; mi < config.models.size(); ++mi) {
    for (int n : config.candidates) {
      for (int m : config.voters) {
        Cell cell{mi, n, m, 0.0, {0, 0}};
        for (int parity = 0; parity < 2; ++parity) {
          cell.trials[parity] = config.exhaustive
                                    ? checked_power(factorial(n), m + parity)
                                    : sampled_trials(config.trials, parity);
        }
        cells.push_back(cell);
      }
    }
  }

  const auto items = split_work(cells);
  std::vector<std::vector<TrialTally>> partial(items.size());
  std::uint64_t total = 0;
  for (const auto& c : cells) total += c.trials[0] + c.trials[1];
  Progress tracker(progress, total);

  std::vector<std::vector<Ranking>> perms(kMaxCandidates + 1);
  if (config.exhaustive) {
    for (int n : config.candidates) {
      if (perms[n].empty()) perms[n] = all_rankings(n);
    }
  }

  parallel_for(items.size(), config.workers, [&](std::size_t w) {
    const WorkItem& item = items[w];
    const Cell& cell = cells[item.cell];
    const ProbabilityModel& model = config.models[cell.model];
    const int voters = cell.voters + item.parity;
    std::vector<TrialTally> tally(layout.size());
    for (std::uint64_t trial = item.begin; trial < item.end; ++trial) {
      Profile profile = [&] {
        if (config.exhaustive) return indexed_profile(perms[cell.candidates], voters, trial);
        RngStream rng(config.seed, stream_key({1, text_key(model.name()),
                                               static_cast<std::uint64_t>(cell.candidates),
                                               static_cast<std::uint64_t>(voters), trial}));
        return sample_profile(model, cell.candidates, voters, rng);
      }();
      MarginGraph graph = margin_graph(profile);
      Electorate electorate(std::move(profile), std::move(graph), opts);
      profile_trial(config, opts, layout, electorate, tally);
    }
    partial[w] = std::move(tally);
    tracker.advance(item.end - item.begin);
  });

  std::vector<std::vector<TrialTally>> merged(cells.size(),
                                              std::vector<TrialTally>(layout.size()));
  for (std::size_t w = 0; w < items.size(); ++w) {
    auto& dst = merged[items[w].cell];
    for (std::size_t s = 0; s < dst.size(); ++s) dst[s] += partial[w][s];
  }
  auto rows = emit_rows(config, Paradigm::profile, cells, layout, merged);
  check_not_all_skipped(rows);
  return rows;
}

namespace {

struct PairTrial {
  const RunConfig& config;
  const EvalOptions& opts;
  const Layout& layout;
  std::uint64_t stream;

  void run(Electorate& base, const Ranking& l_den, const Ranking& l_num, int size,
           std::vector<TrialTally>& out) const {
    Electorate with_den = with_coalition(base, l_den, size, opts);
    const Candidate x = l_den.top();
    std::array<std::optional<Electorate>, kMaxCandidates> with_num;

    for (std::size_t k = 0; k < layout.methods; ++k) {
      const MethodId& method = config.methods[k];
      WinnerSet before, after_den, after_num;
      Candidate a = 0;
      bool ok = false;
      if (const auto w = base.winners(method)) {
        before = *w;
        if (const auto wd = with_den.winners(method)) {
          after_den = *wd;
          RngStream pick(config.seed, stream_key({stream, method_key(method)}));
          const auto members = before.members();
          a = members[pick.below(members.size())];
          if (!with_num[a]) {
            with_num[a].emplace(with_coalition(base, move_to_top(l_num, a), size, opts));
          }
          if (const auto wn = with_num[a]->winners(method)) {
            after_num = *wn;
            ok = true;
          }
        }
      }

      const bool raw_event = ok && before.contains(x) && !after_den.contains(x);
      const bool den_event = ok && !after_den.contains(a);
      const bool num_event = ok && !after_num.contains(a);

      for (bool ratio : {false, true}) {
        TrialTally& t = out[layout.unconditioned(k, ratio)];
        if (!ok) {
          add_skip(t);
          continue;
        }
        ++t.trials;
        ++t.cond_hits;
        ++t.num_base;
        if (ratio) {
          t.num_event += num_event;
          t.den_event += den_event;
          ++t.den_base;
        } else {
          t.num_event += raw_event;
        }
      }

      for (std::size_t j = 0; j < layout.comparisons; ++j) {
        const MethodId& other = config.comparisons[j];
        WinnerSet o_before, o_den, o_num;
        bool o_ok = false;
        if (ok) {
          const auto wb = base.winners(other);
          const auto wd = wb ? with_den.winners(other) : std::nullopt;
          const auto wn = wd ? with_num[a]->winners(other) : std::nullopt;
          if (wn) {
            o_before = *wb;
            o_den = *wd;
            o_num = *wn;
            o_ok = true;
          }
        }
        for (bool ratio : {false, true}) {
          TrialTally& t = out[layout.conditioned(k, j, ratio)];
          if (!o_ok) {
            add_skip(t);
            continue;
          }
          ++t.trials;
          if (method == other) continue;
          const bool differ_p = before != o_before;
          const bool gate_den = differ_p || after_den != o_den;
          const bool gate_num = differ_p || after_num != o_num;
          if (ratio) {
            if (gate_num) {
              ++t.cond_hits;
              ++t.num_base;
              t.num_event += num_event;
            }
            if (gate_den) {
              ++t.den_base;
              t.den_event += den_event;
            }
          } else if (gate_den) {
            ++t.cond_hits;
            ++t.num_base;
            t.num_event += raw_event;
          }
        }
      }
    }
  }
};

}  // namespace

std::vector<EstimateRow> run_pair_paradigm(const RunConfig& config, const ProgressFn& progress) {
  config.validate();
  if (config.exhaustive) throw InvalidArgument("exhaustive mode supports only the profile paradigm");
  const EvalOptions opts{config.rp_cap};
  const Layout layout{config.methods.size(), config.comparisons.size()};

  std::vector<Cell> cells;
  for (std::size_t mi = 0; mi < config.models.size(); ++mi) {
    for (int n : config.candidates) {
      for (int m : config.voters) {
        for (double frac : config.coalition_fracs) {
          cells.push_back({mi, n, m, frac,
                           {sampled_trials(config.trials, 0), sampled_trials(config.trials, 1)}});
        }
      }
    }
  }

  const auto items = split_work(cells);
  std::vector<std::vector<TrialTally>> partial(items.size());
  std::uint64_t total = 0;
  for (const auto& c : cells) total += c.trials[0] + c.trials[1];
  Progress tracker(progress, total);

  parallel_for(items.size(), config.workers, [&](std::size_t w) {
    const WorkItem& item = items[w];
    const Cell& cell = cells[item.cell];
    const ProbabilityModel& model = config.models[cell.model];
    const int voters = cell.voters + item.parity;
    const int size = coalition_size(cell.frac, voters);
    std::vector<TrialTally> tally(layout.size());
    for (std::uint64_t trial = item.begin; trial < item.end; ++trial) {
      const std::uint64_t stream =
          stream_key({2, text_key(model.name()), static_cast<std::uint64_t>(cell.candidates),
                      static_cast<std::uint64_t>(voters), text_key(std::to_string(cell.frac)),
                      trial});
      RngStream rng(config.seed, stream);
      Profile profile = sample_profile(model, cell.candidates, voters, rng);
      const Ranking l_den =
          sample_coalition_ranking(model, profile, config.coalition_draw, rng);
      const Ranking l_num =
          sample_coalition_ranking(model, profile, config.coalition_draw, rng);
      MarginGraph graph = margin_graph(profile);
      Electorate base(std::move(profile), std::move(graph), opts);
      PairTrial{config, opts, layout, stream}.run(base, l_den, l_num, size, tally);
    }
    partial[w] = std::move(tally);
    tracker.advance(item.end - item.begin);
  });

  std::vector<std::vector<TrialTally>> merged(cells.size(),
                                              std::vector<TrialTally>(layout.size()));
  for (std::size_t w = 0; w < items.size(); ++w) {
    auto& dst = merged[items[w].cell];
    for (std::size_t s = 0; s < dst.size(); ++s) dst[s] += partial[w][s];
  }
  auto rows = emit_rows(config, Paradigm::pair, cells, layout, merged);
  check_not_all_skipped(rows);
  return rows;
}

std::vector<EstimateRow> run_simulation(const RunConfig& config, const ProgressFn& progress) {
  config.validate();
  std::vector<EstimateRow> rows;
  for (Paradigm p : config.paradigms) {
    auto part = p == Paradigm::profile ? run_profile_paradigm(config, progress)
                                       : run_pair_paradigm(config, progress);
    rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  std::stable_sort(rows.begin(), rows.end(), row_key_less);
  return rows;
}

}  // namespace pilab
