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

#include <string>

#include "pilab/error.hpp"
#include "pilab/methods.hpp"

namespace pilab {

WinnerSet evaluate_margin(const MethodId& method, const MarginGraph& graph,
                          const EvalOptions& opts) {
  switch (method.family) {
    case Family::copeland:
      return copeland(graph, method.variant == Variant::llull ? CopelandVariant::llull
                                                              : CopelandVariant::copeland);
    case Family::top_cycle:
      return top_cycle(graph, method.variant == Variant::gocha ? TopCycleVariant::gocha
                                                               : TopCycleVariant::getcha);
    case Family::uncovered_set:
      switch (method.variant) {
        case Variant::fishburn: return uncovered_set(graph, CoverVariant::fishburn);
        case Variant::bordes: return uncovered_set(graph, CoverVariant::bordes);
        case Variant::mckelvey: return uncovered_set(graph, CoverVariant::mckelvey);
        default: return uncovered_set(graph, CoverVariant::gillies);
      }
    case Family::ranked_pairs: return ranked_pairs(graph, opts.rp_cap);
    case Family::beat_path: return beat_path(graph);
    case Family::split_cycle: return split_cycle(graph);
    case Family::minimax: return minimax(graph);
    default:
      throw InvalidArgument("method " + method.display_name() +
                            " is not computable from a margin graph");
  }
}

WinnerSet evaluate(const MethodId& method, const Profile& profile, const EvalOptions& opts) {
  if (method.margin_based()) return evaluate_margin(method, margin_graph(profile), opts);
  const TieHandling ties =
      method.variant == Variant::put ? TieHandling::put : TieHandling::remove_all;
  switch (method.family) {
    case Family::scoring:
      return method.variant == Variant::borda ? borda(profile) : plurality(profile);
    case Family::instant_runoff: return instant_runoff(profile, ties);
    case Family::coombs: return coombs(profile, ties);
    case Family::baldwin: return baldwin(profile, ties);
    case Family::nanson:
      return nanson(profile, method.variant == Variant::weak ? NansonVariant::weak
                                                              : NansonVariant::strict);
    case Family::bucklin:
      return bucklin(profile, method.variant == Variant::simplified ? BucklinVariant::simplified
                                                                    : BucklinVariant::full);
    case Family::ranked_pairs_zt: return ranked_pairs_zt(profile);
    case Family::plurality_runoff:
      return plurality_runoff(profile, method.variant == Variant::naive ? RunoffVariant::naive
                                                                         : RunoffVariant::put);
    default:
      throw InvalidArgument("unhandled method " + method.display_name());
  }
}

}  // namespace pilab
