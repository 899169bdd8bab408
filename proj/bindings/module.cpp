#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "negscope/corpus.hpp"
#include "negscope/evaluate.hpp"
#include "negscope/lexicons.hpp"
#include "negscope/scope.hpp"
#include "negscope/transform.hpp"

namespace py = pybind11;
using namespace negscope;

namespace {

std::vector<Token> tokens_from_py(const py::sequence& seq) {
  std::vector<Token> out;
  int index = 0;
  for (const auto& item : seq) {
    if (py::isinstance<py::str>(item)) {
      out.emplace_back(index++, item.cast<std::string>(), "", "");
      continue;
    }
    py::dict d = item.cast<py::dict>();
    out.emplace_back(index++, d["surface"].cast<std::string>(),
                     d.contains("lemma") ? d["lemma"].cast<std::string>() : "",
                     d.contains("pos") ? d["pos"].cast<std::string>() : "");
  }
  return out;
}

Sentence sentence_from_py(const py::sequence& tokens,
                          const std::optional<std::string>& parse) {
  std::vector<Token> toks = tokens_from_py(tokens);
  if (parse) {
    auto tree = std::make_shared<ParseTree>(parse_bracketed(*parse));
    return align(std::move(tree), std::move(toks));
  }
  Sentence sent;
  sent.tokens = std::move(toks);
  return sent;
}

py::dict scope_to_py(const ScopeResult& res, const std::string& cue_form,
                     bool is_true_cue, bool with_trace) {
  py::dict out;
  out["cue_index"] = res.cue_index;
  out["cue_form"] = cue_form;
  out["is_true_cue"] = is_true_cue;
  out["scope"] = res.scope;
  if (with_trace) {
    py::list trace;
    for (const auto& step : res.trace) {
      py::dict d;
      d["rule"] = step.rule;
      d["before"] = step.before;
      d["after"] = step.after;
      trace.append(d);
    }
    out["trace"] = trace;
  }
  return out;
}

py::dict prf_to_py(const Prf& p) {
  py::dict out;
  out["precision"] = p.precision;
  out["recall"] = p.recall;
  out["f1"] = p.f1;
  out["support"] = p.support;
  return out;
}

CueAnnotation annotation_from_py(const py::dict& d) {
  CueAnnotation a;
  a.sentence_id = d["sentence_id"].cast<std::string>();
  a.cue_index = d["cue_index"].cast<int>();
  a.is_true_cue =
      d.contains("is_true_cue") ? d["is_true_cue"].cast<bool>() : true;
  a.scope = d["scope"].cast<std::vector<int>>();
  a.n_tokens = d["n_tokens"].cast<int>();
  return a;
}

AntonymDict antonyms_from_py(const py::object& arg) {
  if (arg.is_none()) return AntonymDict{};
  if (py::isinstance<py::str>(arg))
    return load_antonyms(arg.cast<std::string>());
  return AntonymDict(arg.cast<std::map<std::string, std::string>>());
}

}  // namespace

PYBIND11_MODULE(_negscope, m) {
  m.doc() = "Negation cue and scope analysis for conversational text";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<AlignError>(m, "AlignError");
  py::register_exception<MissingTreeError>(m, "MissingTreeError");
  py::register_exception<AlignmentError>(m, "AlignmentError");

  m.def("normalize_form", &normalize_form, py::arg("surface"),
        "Lowercased, apostrophe-stripped matching form of a token.");
  m.def("normalize_tweet", &normalize_tweet, py::arg("text"),
        "Replace URLs with URL, @handles with MENTION, strip '#' from tags.");

  m.def(
      "parse_tree",
      [](const std::string& bracketed) {
        ParseTree tree = parse_bracketed(bracketed);
        py::dict out;
        out["canonical"] = tree.to_bracketed();
        py::list leaves;
        for (const ParseNode* leaf : tree.leaves()) {
          py::dict d;
          d["surface"] = leaf->leaf_text;
          d["pos"] = leaf->label;
          leaves.append(d);
        }
        out["leaves"] = leaves;
        return out;
      },
      py::arg("bracketed"),
      "Validate a bracketed parse; returns its canonical form and leaves.");

  m.def(
      "find_cues",
      [](const py::sequence& tokens, const std::optional<std::string>& cues) {
        Sentence sent = sentence_from_py(tokens, std::nullopt);
        const CueLexicon lex =
            cues ? load_cue_lexicon(*cues) : CueLexicon::defaults();
        py::list out;
        for (const CueOccurrence& occ : find_cues(sent, lex)) {
          py::dict d;
          d["token_index"] = occ.token_index;
          d["cue_form"] = occ.cue_form;
          out.append(d);
        }
        return out;
      },
      py::arg("tokens"), py::arg("cues") = py::none(),
      "Lexicon matches over the token list, in index order.");

  m.def(
      "detect_scopes",
      [](const py::sequence& tokens, const std::string& parse,
         const std::optional<std::vector<int>>& cue_indices, bool trace) {
        Sentence sent = sentence_from_py(tokens, parse);
        const CueLexicon& cues = CueLexicon::defaults();
        const NrpCopulaList& nrp = NrpCopulaList::defaults();
        const ConnectiveList& conn = ConnectiveList::defaults();
        std::vector<CueOccurrence> occs;
        if (cue_indices) {
          for (int i : *cue_indices) {
            CueOccurrence occ;
            occ.token_index = i;
            occ.cue_form = sent.tokens.at(i).norm;
            occs.push_back(occ);
          }
        } else {
          occs = find_cues(sent, cues);
        }
        py::list out;
        for (const CueOccurrence& occ : occs) {
          ScopeResult res = detect_scope(sent, occ, cues, nrp, conn);
          out.append(scope_to_py(res, occ.cue_form, occ.is_true_cue, trace));
        }
        return out;
      },
      py::arg("tokens"), py::arg("parse"),
      py::arg("cue_indices") = py::none(), py::arg("trace") = false,
      "Tree-based scope for each cue (all lexicon matches by default).");

  m.def(
      "punctuation_scope",
      [](const py::sequence& tokens, int cue_index) {
        Sentence sent = sentence_from_py(tokens, std::nullopt);
        CueOccurrence occ;
        occ.token_index = cue_index;
        occ.cue_form = sent.tokens.at(cue_index).norm;
        return punctuation_scope(sent, occ, true).scope;
      },
      py::arg("tokens"), py::arg("cue_index"),
      "Baseline scope: cue+1 up to the next punctuation token.");

  m.def(
      "transform",
      [](const py::sequence& tokens, const py::sequence& scopes,
         const std::string& mode, const py::object& antonyms) {
        Sentence sent = sentence_from_py(tokens, std::nullopt);
        std::vector<ScopeResult> parsed;
        for (const auto& item : scopes) {
          py::dict d = item.cast<py::dict>();
          ScopeResult s;
          s.cue_index = d["cue_index"].cast<int>();
          s.scope = d["scope"].cast<std::vector<int>>();
          parsed.push_back(std::move(s));
        }
        TransformConfig config;
        config.mode = parse_transform_mode(mode);
        TransformedSentence out =
            apply_transform(sent, parsed, antonyms_from_py(antonyms), config);
        py::dict result;
        result["tokens"] = out.tokens;
        result["warnings"] = out.warnings;
        return result;
      },
      py::arg("tokens"), py::arg("scopes"), py::arg("mode") = "not-prefix",
      py::arg("antonyms") = py::none(),
      "Apply a negation-aware rewrite; antonyms may be a path or a dict.");

  m.def(
      "score_scopes",
      [](const py::sequence& gold, const py::sequence& pred) {
        std::vector<CueAnnotation> g;
        for (const auto& item : gold)
          g.push_back(annotation_from_py(item.cast<py::dict>()));
        std::vector<ScopePrediction> p;
        for (const auto& item : pred) {
          py::dict d = item.cast<py::dict>();
          ScopePrediction sp;
          sp.sentence_id = d["sentence_id"].cast<std::string>();
          sp.cue_index = d["cue_index"].cast<int>();
          sp.scope = d["scope"].cast<std::vector<int>>();
          p.push_back(std::move(sp));
        }
        EvalReport r = score_scopes(g, p);
        py::dict out;
        out["in_scope"] = prf_to_py(r.in_scope);
        out["out_scope"] = prf_to_py(r.out_scope);
        out["pcs"] = r.pcs;
        return out;
      },
      py::arg("gold"), py::arg("pred"),
      "Token-level P/R/F and PCS against gold scopes.");

  m.def(
      "agreement",
      [](const py::sequence& a, const py::sequence& b) {
        std::vector<CueAnnotation> xa, xb;
        for (const auto& item : a)
          xa.push_back(annotation_from_py(item.cast<py::dict>()));
        for (const auto& item : b)
          xb.push_back(annotation_from_py(item.cast<py::dict>()));
        AgreementReport r = agreement(xa, xb);
        py::dict out;
        out["token_agreement"] = r.token_agreement;
        out["full_scope_agreement"] = r.full_scope_agreement;
        return out;
      },
      py::arg("a"), py::arg("b"),
      "Token-level and full-scope inter-annotator agreement.");

  py::class_<LinearModel>(m, "CueModel")
      .def_static("load", &LinearModel::load_file, py::arg("path"))
      .def("save", &LinearModel::save_file, py::arg("path"))
      .def_property_readonly("threshold", &LinearModel::threshold)
      .def(
          "classify",
          [](const LinearModel& model, const py::sequence& tokens,
             int cue_index) {
            Sentence sent = sentence_from_py(tokens, std::nullopt);
            CueOccurrence occ;
            occ.token_index = cue_index;
            occ.cue_form = sent.tokens.at(cue_index).norm;
            CueOccurrence scored = classify(model, sent, occ);
            py::dict out;
            out["is_true_cue"] = scored.is_true_cue;
            out["score"] = scored.score;
            return out;
          },
          py::arg("tokens"), py::arg("cue_index"),
          "Score one candidate cue; true iff score >= threshold.");

  m.def(
      "train_cue_model",
      [](const py::sequence& examples, unsigned seed, int epochs,
         double learning_rate, double l2, double threshold,
         double weight_true, double weight_false) {
        std::vector<std::pair<FeatureVector, bool>> data;
        for (const auto& item : examples) {
          py::dict d = item.cast<py::dict>();
          Sentence sent =
              sentence_from_py(d["tokens"].cast<py::sequence>(), std::nullopt);
          CueOccurrence occ;
          occ.token_index = d["cue_index"].cast<int>();
          occ.cue_form = sent.tokens.at(occ.token_index).norm;
          data.emplace_back(extract_features(sent, occ),
                            d["is_true_cue"].cast<bool>());
        }
        TrainConfig config;
        config.seed = seed;
        config.epochs = epochs;
        config.learning_rate = learning_rate;
        config.l2 = l2;
        config.threshold = threshold;
        config.weight_true = weight_true;
        config.weight_false = weight_false;
        return train(data, config);
      },
      py::arg("examples"), py::arg("seed") = 42, py::arg("epochs") = 100,
      py::arg("learning_rate") = 0.1, py::arg("l2") = 1e-4,
      py::arg("threshold") = 0.5, py::arg("weight_true") = 1.0,
      py::arg("weight_false") = 1.0,
      "Train the cue disambiguator on labeled (tokens, cue_index) examples.");

  m.def(
      "default_lexicons",
      []() {
        py::dict out;
        out["cues"] = CueLexicon::defaults().entries();
        out["nrp"] = NrpCopulaList::defaults().entries();
        out["connectives"] = ConnectiveList::defaults().entries();
        return out;
      },
      "The built-in cue, NRP/copula and connective inventories.");
}
