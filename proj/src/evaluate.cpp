#include "negscope/evaluate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace negscope {

namespace {

using SiteKey = std::pair<std::string, int>;

double safe_div(long num, long den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

Prf make_prf(long tp, long fp, long fn, long support) {
  Prf out;
  out.precision = safe_div(tp, tp + fp);
  out.recall = safe_div(tp, tp + fn);
  out.f1 = (out.precision + out.recall) == 0.0
               ? 0.0
               : 2.0 * out.precision * out.recall /
                     (out.precision + out.recall);
  out.support = support;
  return out;
}

template <typename T>
std::map<SiteKey, const T*> index_by_site(const std::vector<T>& items,
                                          const char* what) {
  std::map<SiteKey, const T*> out;
  for (const T& item : items) {
    auto [it, inserted] =
        out.emplace(SiteKey{item.sentence_id, item.cue_index}, &item);
    if (!inserted)
      throw AlignmentError(std::string("duplicate ") + what + " for cue (" +
                           item.sentence_id + ", " +
                           std::to_string(item.cue_index) + ")");
  }
  return out;
}

}  // namespace

EvalReport score_scopes(const std::vector<CueAnnotation>& gold,
                        const std::vector<ScopePrediction>& pred) {
  auto gold_by_site = index_by_site(gold, "gold annotation");
  auto pred_by_site = index_by_site(pred, "prediction");

  for (const auto& [site, p] : pred_by_site) {
    if (!gold_by_site.count(site))
      throw AlignmentError("prediction for unknown cue (" + site.first + ", " +
                           std::to_string(site.second) + ")");
  }

  EvalReport report;
  ScopeCounts& c = report.counts;
  for (const CueAnnotation& g : gold) {
    auto it = pred_by_site.find(SiteKey{g.sentence_id, g.cue_index});
    if (it == pred_by_site.end()) {
      if (g.is_true_cue)
        throw AlignmentError("missing prediction for gold true cue (" +
                             g.sentence_id + ", " +
                             std::to_string(g.cue_index) + ")");
      continue;  // false cue with no prediction: nothing to score
    }
    const ScopePrediction& p = *it->second;
    std::set<int> gset(g.scope.begin(), g.scope.end());
    std::set<int> pset(p.scope.begin(), p.scope.end());
    for (int t = 0; t < g.n_tokens; ++t) {
      bool in_g = gset.count(t) > 0;
      bool in_p = pset.count(t) > 0;
      if (in_g && in_p)
        ++c.tp;
      else if (!in_g && in_p)
        ++c.fp;
      else if (in_g && !in_p)
        ++c.fn;
      else
        ++c.tn;
    }
    if (g.is_true_cue) {
      ++c.pcs_total;
      if (gset == pset) ++c.pcs_exact;
    }
  }

  report.in_scope = make_prf(c.tp, c.fp, c.fn, c.tp + c.fn);
  report.out_scope = make_prf(c.tn, c.fn, c.fp, c.tn + c.fp);
  report.pcs = safe_div(c.pcs_exact, c.pcs_total);
  return report;
}

EvalReport score_cues(const std::vector<CueAnnotation>& gold,
                      const std::vector<CuePrediction>& pred) {
  auto gold_by_site = index_by_site(gold, "gold cue");
  auto pred_by_site = index_by_site(pred, "cue prediction");

  long tp_true = 0, fp_true = 0, fn_true = 0;
  long tp_false = 0, fp_false = 0, fn_false = 0;
  long support_true = 0, support_false = 0, correct = 0;

  for (const CueAnnotation& g : gold) {
    auto it = pred_by_site.find(SiteKey{g.sentence_id, g.cue_index});
    if (it == pred_by_site.end())
      throw AlignmentError("missing cue prediction for (" + g.sentence_id +
                           ", " + std::to_string(g.cue_index) + ")");
    bool pred_true = it->second->is_true_cue;
    (g.is_true_cue ? support_true : support_false)++;
    if (pred_true == g.is_true_cue) ++correct;
    if (g.is_true_cue && pred_true) ++tp_true;
    if (!g.is_true_cue && pred_true) ++fp_true;
    if (g.is_true_cue && !pred_true) {
      ++fn_true;
      ++fp_false;
    }
    if (!g.is_true_cue && !pred_true) ++tp_false;
    if (!g.is_true_cue && pred_true) ++fn_false;
  }
  for (const auto& [site, p] : pred_by_site) {
    if (!gold_by_site.count(site))
      throw AlignmentError("cue prediction for unknown site (" + site.first +
                           ", " + std::to_string(site.second) + ")");
  }

  EvalReport report;
  report.cue_true = make_prf(tp_true, fp_true, fn_true, support_true);
  report.cue_false = make_prf(tp_false, fp_false, fn_false, support_false);
  report.cue_correct = correct;
  report.cue_total = support_true + support_false;
  return report;
}

AgreementReport agreement(const std::vector<CueAnnotation>& a,
                          const std::vector<CueAnnotation>& b) {
  auto a_by_site = index_by_site(a, "annotation (a)");
  auto b_by_site = index_by_site(b, "annotation (b)");
  if (a_by_site.size() != b_by_site.size())
    throw AlignmentError("annotation sets have different cue sites");

  long agree_tokens = 0, total_tokens = 0;
  long exact = 0, sites = 0;
  for (const auto& [site, ga] : a_by_site) {
    auto it = b_by_site.find(site);
    if (it == b_by_site.end())
      throw AlignmentError("cue site (" + site.first + ", " +
                           std::to_string(site.second) +
                           ") missing from one annotation set");
    const CueAnnotation& gb = *it->second;
    if (ga->n_tokens != gb.n_tokens)
      throw AlignmentError("token count mismatch at cue site (" + site.first +
                           ", " + std::to_string(site.second) + ")");
    std::set<int> sa(ga->scope.begin(), ga->scope.end());
    std::set<int> sb(gb.scope.begin(), gb.scope.end());
    for (int t = 0; t < ga->n_tokens; ++t)
      if ((sa.count(t) > 0) == (sb.count(t) > 0)) ++agree_tokens;
    total_tokens += ga->n_tokens;
    ++sites;
    if (sa == sb) ++exact;
  }

  AgreementReport report;
  report.token_agreement = safe_div(agree_tokens, total_tokens);
  report.full_scope_agreement = safe_div(exact, sites);
  return report;
}

std::string format_report(const EvalReport& report) {
  std::ostringstream out;
  char buf[160];
  auto row = [&](const char* name, const Prf& p) {
    std::snprintf(buf, sizeof(buf), "%-14s %9.3f %9.3f %9.3f %9ld\n", name,
                  p.precision, p.recall, p.f1, p.support);
    out << buf;
  };
  bool has_scope = report.counts.tp + report.counts.fp + report.counts.fn +
                       report.counts.tn >
                   0;
  bool has_cues = report.cue_total > 0;
  if (has_cues) {
    out << "Cue classification\n";
    std::snprintf(buf, sizeof(buf), "%-14s %9s %9s %9s %9s\n", "", "P", "R",
                  "F", "support");
    out << buf;
    row("False cues", report.cue_false);
    row("Actual cues", report.cue_true);
    std::snprintf(buf, sizeof(buf), "accuracy: %.3f (%ld/%ld)\n",
                  safe_div(report.cue_correct, report.cue_total),
                  report.cue_correct, report.cue_total);
    out << buf;
  }
  if (has_scope) {
    if (has_cues) out << "\n";
    out << "Scope detection (token level)\n";
    std::snprintf(buf, sizeof(buf), "%-14s %9s %9s %9s %9s\n", "", "P", "R",
                  "F", "support");
    out << buf;
    row("In-scope", report.in_scope);
    row("Out-scope", report.out_scope);
    std::snprintf(buf, sizeof(buf), "PCS: %.3f (%ld/%ld)\n", report.pcs,
                  report.counts.pcs_exact, report.counts.pcs_total);
    out << buf;
  }
  return out.str();
}

}  // namespace negscope
