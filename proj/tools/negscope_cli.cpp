// negscope: batch negation cue/scope pipeline over JSONL corpora.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "negscope/corpus.hpp"
#include "negscope/cue.hpp"
#include "negscope/evaluate.hpp"
#include "negscope/lexicons.hpp"
#include "negscope/scope.hpp"
#include "negscope/transform.hpp"

using nlohmann::json;
using namespace negscope;

namespace {

struct LexiconFlags {
  std::string cues_path, nrp_path, connectives_path;

  CueLexicon cues() const {
    return cues_path.empty() ? CueLexicon::defaults()
                             : load_cue_lexicon(cues_path);
  }
  NrpCopulaList nrp() const {
    return nrp_path.empty() ? NrpCopulaList::defaults()
                            : load_nrp_list(nrp_path);
  }
  ConnectiveList connectives() const {
    return connectives_path.empty() ? ConnectiveList::defaults()
                                    : load_connective_list(connectives_path);
  }
};

void add_lexicon_flags(CLI::App* cmd, LexiconFlags* flags) {
  cmd->add_option("--cues", flags->cues_path, "Cue lexicon file");
  cmd->add_option("--nrp", flags->nrp_path, "NRP/copula list file");
  cmd->add_option("--connectives", flags->connectives_path,
                  "Prune-connective list file");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot write: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct Reject {
  std::size_t line;
  std::string id;
  std::string error;
};

int write_rejects(const std::vector<Reject>& rejects,
                  const std::string& path) {
  if (rejects.empty()) return 0;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write rejects file: " + path);
  for (const auto& r : rejects) {
    json j{{"line", r.line}, {"id", r.id}, {"error", r.error}};
    out << j.dump() << "\n";
  }
  std::cerr << rejects.size() << " record(s) rejected, see " << path << "\n";
  return 2;
}

int cmd_detect(const std::string& input, const std::string& output,
               std::string rejects_path, const LexiconFlags& lex_flags,
               const std::string& model_path, bool gold_cues,
               const std::string& baseline, bool baseline_all_cues,
               bool trace) {
  CueLexicon cues = lex_flags.cues();
  NrpCopulaList nrp = lex_flags.nrp();
  ConnectiveList connectives = lex_flags.connectives();
  std::optional<LinearModel> model;
  if (!model_path.empty()) model = LinearModel::load_file(model_path);
  const bool use_baseline = baseline == "punctuation";
  if (rejects_path.empty())
    rejects_path = (output == "-" ? "rejects" : output) + ".rejects";

  Output out(output);
  std::vector<Reject> rejects;
  std::size_t lineno = 0;
  for (const std::string& line : read_lines_file(input)) {
    ++lineno;
    if (line.empty()) continue;
    std::string id;
    try {
      CorpusRecord rec = parse_corpus_record(line);
      id = rec.id;
      Sentence sent = to_sentence(rec);

      std::vector<CueOccurrence> occs;
      if (gold_cues) {
        for (const auto& c : rec.gold_cues)
          occs.push_back(CueOccurrence{c.index,
                                       sent.tokens[c.index].norm,
                                       c.is_true_cue, c.is_true_cue ? 1.0 : 0.0});
      } else {
        occs = find_cues(sent, cues);
        if (model)
          for (auto& occ : occs) occ = classify(*model, sent, occ);
      }

      for (const auto& occ : occs) {
        ScopeResult result;
        if (use_baseline) {
          result = punctuation_scope(sent, occ, baseline_all_cues);
        } else {
          if (!sent.tree)
            throw MissingTreeError("missing tree (record " + rec.id + ")");
          result = detect_scope(sent, occ, cues, nrp, connectives);
        }
        ScopeRecord sr;
        sr.id = rec.id;
        sr.cue_index = occ.token_index;
        sr.cue_form = occ.cue_form;
        sr.is_true_cue = occ.is_true_cue;
        sr.score = occ.score;
        sr.scope = result.scope;
        sr.trace = result.trace;
        sr.with_trace = trace;
        out.stream() << scope_record_to_json(sr).dump() << "\n";
      }
    } catch (const std::exception& e) {
      rejects.push_back(Reject{lineno, id, e.what()});
    }
  }
  return write_rejects(rejects, rejects_path);
}

int cmd_train_cue(const std::string& input, const std::string& output,
                  const TrainConfig& config) {
  std::vector<std::pair<FeatureVector, bool>> examples;
  std::size_t lineno = 0;
  for (const std::string& line : read_lines_file(input)) {
    ++lineno;
    if (line.empty()) continue;
    CorpusRecord rec = parse_corpus_record(line);
    if (!rec.has_gold_cues) continue;
    // Cue features need no tree; skip parsing so dirty parses cannot block
    // training.
    Sentence sent;
    sent.tokens = rec.tokens;
    sent.source_id = rec.id;
    for (const auto& c : rec.gold_cues) {
      CueOccurrence occ{c.index, sent.tokens[c.index].norm, true, 1.0};
      examples.emplace_back(extract_features(sent, occ), c.is_true_cue);
    }
  }
  if (examples.empty())
    throw std::runtime_error("no gold cue labels found in " + input);
  LinearModel model = train(examples, config);
  model.save_file(output);
  std::cerr << "trained on " << examples.size() << " cue examples, final loss "
            << model.metadata().at("final_loss") << "\n";
  return 0;
}

struct GoldTables {
  std::vector<CueAnnotation> annotations;  // one per gold cue site
};

GoldTables load_gold(const std::string& path) {
  GoldTables gold;
  for (const std::string& line : read_lines_file(path)) {
    if (line.empty()) continue;
    CorpusRecord rec = parse_corpus_record(line);
    std::map<int, std::vector<int>> scope_of;
    for (const auto& s : rec.gold_scopes) scope_of[s.cue_index] = s.token_indices;
    for (const auto& c : rec.gold_cues) {
      CueAnnotation ann;
      ann.sentence_id = rec.id;
      ann.cue_index = c.index;
      ann.is_true_cue = c.is_true_cue;
      ann.n_tokens = static_cast<int>(rec.tokens.size());
      auto it = scope_of.find(c.index);
      if (it != scope_of.end()) ann.scope = it->second;
      gold.annotations.push_back(std::move(ann));
    }
  }
  return gold;
}

int cmd_evaluate(const std::string& gold_path, const std::string& pred_path,
                 const std::string& json_path) {
  GoldTables gold = load_gold(gold_path);
  std::vector<ScopePrediction> scope_preds;
  std::vector<CuePrediction> cue_preds;
  for (const std::string& line : read_lines_file(pred_path)) {
    if (line.empty()) continue;
    ScopeRecord rec = parse_scope_record(line);
    scope_preds.push_back(ScopePrediction{rec.id, rec.cue_index, rec.scope});
    cue_preds.push_back(CuePrediction{rec.id, rec.cue_index, rec.is_true_cue});
  }

  EvalReport cue_report = score_cues(gold.annotations, cue_preds);
  EvalReport scope_report = score_scopes(gold.annotations, scope_preds);

  EvalReport report = scope_report;
  report.cue_true = cue_report.cue_true;
  report.cue_false = cue_report.cue_false;
  report.cue_correct = cue_report.cue_correct;
  report.cue_total = cue_report.cue_total;

  std::cout << format_report(report);
  if (!json_path.empty()) {
    json j{{"in_scope",
            {{"precision", report.in_scope.precision},
             {"recall", report.in_scope.recall},
             {"f1", report.in_scope.f1},
             {"support", report.in_scope.support}}},
           {"out_scope",
            {{"precision", report.out_scope.precision},
             {"recall", report.out_scope.recall},
             {"f1", report.out_scope.f1},
             {"support", report.out_scope.support}}},
           {"pcs", report.pcs},
           {"cue_true",
            {{"precision", report.cue_true.precision},
             {"recall", report.cue_true.recall},
             {"f1", report.cue_true.f1},
             {"support", report.cue_true.support}}},
           {"cue_false",
            {{"precision", report.cue_false.precision},
             {"recall", report.cue_false.recall},
             {"f1", report.cue_false.f1},
             {"support", report.cue_false.support}}}};
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + json_path);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_transform(const std::string& input, const std::string& scopes_path,
                  const std::string& output, const std::string& mode_name,
                  const std::string& antonyms_path, bool keep_cue,
                  std::string rejects_path) {
  TransformConfig config;
  config.mode = parse_transform_mode(mode_name);
  config.keep_cue = keep_cue;
  AntonymDict antonyms;
  if (!antonyms_path.empty()) antonyms = load_antonyms(antonyms_path);
  if (config.mode != TransformMode::NotPrefix && antonyms.pairs().empty())
    throw std::runtime_error("antonym mode needs --antonyms FILE");

  std::map<std::string, std::vector<ScopeResult>> scopes_by_id;
  for (const std::string& line : read_lines_file(scopes_path)) {
    if (line.empty()) continue;
    ScopeRecord rec = parse_scope_record(line);
    ScopeResult s;
    s.cue_index = rec.cue_index;
    s.scope = rec.scope;
    scopes_by_id[rec.id].push_back(std::move(s));
  }
  if (rejects_path.empty())
    rejects_path = (output == "-" ? "rejects" : output) + ".rejects";

  Output out(output);
  std::vector<Reject> rejects;
  std::size_t lineno = 0;
  for (const std::string& line : read_lines_file(input)) {
    ++lineno;
    if (line.empty()) continue;
    std::string id;
    try {
      CorpusRecord rec = parse_corpus_record(line);
      id = rec.id;
      Sentence sent;
      sent.tokens = rec.tokens;
      sent.source_id = rec.id;
      auto it = scopes_by_id.find(rec.id);
      static const std::vector<ScopeResult> kNone;
      const auto& scopes = it == scopes_by_id.end() ? kNone : it->second;
      TransformedSentence transformed =
          apply_transform(sent, scopes, antonyms, config);

      json j = rec.raw;
      j["tokens"] = transformed.tokens;
      json prov = json::array();
      for (const auto& p : transformed.provenance) {
        json e{{"source_index", p.source_index}};
        switch (p.kind) {
          case TokenProvenance::Kind::Unchanged:
            e["kind"] = "unchanged";
            break;
          case TokenProvenance::Kind::Prefixed:
            e["kind"] = "prefixed";
            break;
          case TokenProvenance::Kind::Substituted:
            e["kind"] = "substituted";
            e["original"] = p.original;
            break;
          case TokenProvenance::Kind::DeletedCue:
            e["kind"] = "deleted_cue";
            break;
        }
        prov.push_back(std::move(e));
      }
      j["provenance"] = std::move(prov);
      if (!transformed.warnings.empty()) j["warnings"] = transformed.warnings;
      out.stream() << j.dump() << "\n";
    } catch (const std::exception& e) {
      rejects.push_back(Reject{lineno, id, e.what()});
    }
  }
  return write_rejects(rejects, rejects_path);
}

int cmd_agree(const std::string& a_path, const std::string& b_path,
              const std::string& json_path) {
  GoldTables a = load_gold(a_path);
  GoldTables b = load_gold(b_path);
  AgreementReport report = agreement(a.annotations, b.annotations);
  std::printf("token agreement:      %.4f\n", report.token_agreement);
  std::printf("full-scope agreement: %.4f\n", report.full_scope_agreement);
  if (!json_path.empty()) {
    json j{{"token_agreement", report.token_agreement},
           {"full_scope_agreement", report.full_scope_agreement}};
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + json_path);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_convert(const std::string& input, const std::string& output,
                const std::string& to) {
  if (to == "sem") {
    std::vector<CorpusRecord> records;
    for (const std::string& line : read_lines_file(input)) {
      if (line.empty()) continue;
      records.push_back(parse_corpus_record(line));
    }
    Output out(output);
    out.stream() << to_sem_columns(records);
    return 0;
  }
  if (to == "jsonl") {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open file: " + input);
    std::stringstream buffer;
    buffer << in.rdbuf();
    Output out(output);
    for (const CorpusRecord& rec : from_sem_columns(buffer.str()))
      out.stream() << corpus_record_to_json(rec).dump() << "\n";
    return 0;
  }
  throw CLI::ValidationError("--to must be 'sem' or 'jsonl'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Negation cue and scope toolkit for conversational text"};
  app.require_subcommand(1);

  // detect
  auto* detect = app.add_subcommand(
      "detect", "Find cues and predict scopes for a JSONL corpus");
  std::string d_input, d_output = "-", d_rejects, d_model, d_baseline;
  bool d_gold_cues = false, d_trace = false, d_baseline_all = false;
  LexiconFlags d_lex;
  detect->add_option("--input,-i", d_input, "Corpus JSONL")->required();
  detect->add_option("--output,-o", d_output, "Scope predictions JSONL");
  detect->add_option("--rejects", d_rejects, "Rejects JSONL");
  add_lexicon_flags(detect, &d_lex);
  detect->add_option("--cue-model", d_model, "Trained cue classifier");
  detect->add_flag("--gold-cues", d_gold_cues,
                   "Use gold cue labels instead of the classifier");
  detect->add_option("--baseline", d_baseline,
                     "Scope baseline ('punctuation')")
      ->check(CLI::IsMember({"punctuation"}));
  detect->add_flag("--baseline-all-cues", d_baseline_all,
                   "Baseline scopes even for false cues");
  detect->add_flag("--trace", d_trace, "Emit rule traces");

  // train-cue
  auto* train_cue = app.add_subcommand(
      "train-cue", "Train the true/false cue classifier on gold labels");
  std::string t_input, t_output;
  TrainConfig t_config;
  train_cue->add_option("--input,-i", t_input, "Corpus JSONL with gold_cues")
      ->required();
  train_cue->add_option("--output,-o", t_output, "Model file")->required();
  train_cue->add_option("--seed", t_config.seed, "RNG seed");
  train_cue->add_option("--epochs", t_config.epochs, "Training epochs");
  train_cue->add_option("--batch", t_config.batch_size, "Mini-batch size");
  train_cue->add_option("--lr", t_config.learning_rate, "Learning rate");
  train_cue->add_option("--l2", t_config.l2, "L2 regularization");
  train_cue->add_option("--threshold", t_config.threshold,
                        "Decision threshold");
  train_cue->add_option("--weight-true", t_config.weight_true,
                        "Class weight: true cues");
  train_cue->add_option("--weight-false", t_config.weight_false,
                        "Class weight: false cues");

  // evaluate
  auto* evaluate = app.add_subcommand(
      "evaluate", "Score predictions against gold annotations");
  std::string e_gold, e_pred, e_json;
  evaluate->add_option("--gold", e_gold, "Gold corpus JSONL")->required();
  evaluate->add_option("--pred", e_pred, "Predictions JSONL")->required();
  evaluate->add_option("--json", e_json, "Also write a JSON report");

  // transform
  auto* transform = app.add_subcommand(
      "transform", "Apply negation-aware token rewriting");
  std::string x_input, x_scopes, x_output = "-", x_mode = "not-prefix",
              x_antonyms, x_rejects;
  bool x_drop_cue = false;
  transform->add_option("--input,-i", x_input, "Corpus JSONL")->required();
  transform->add_option("--scopes", x_scopes, "Scope predictions JSONL")
      ->required();
  transform->add_option("--output,-o", x_output, "Transformed JSONL");
  transform->add_option("--mode", x_mode, "not-prefix | antonym | antonym-all")
      ->check(CLI::IsMember({"not-prefix", "antonym", "antonym-all"}));
  transform->add_option("--antonyms", x_antonyms, "Antonym TSV");
  transform->add_flag("--drop-cue", x_drop_cue,
                      "Delete cue tokens in not-prefix mode too");
  transform->add_option("--rejects", x_rejects, "Rejects JSONL");

  // agree
  auto* agree = app.add_subcommand(
      "agree", "Inter-annotator agreement between two annotated corpora");
  std::string a_a, a_b, a_json;
  agree->add_option("--a", a_a, "Annotator A corpus JSONL")->required();
  agree->add_option("--b", a_b, "Annotator B corpus JSONL")->required();
  agree->add_option("--json", a_json, "Also write a JSON report");

  // convert
  auto* convert = app.add_subcommand(
      "convert", "Convert between JSONL and *SEM-style columns");
  std::string c_input, c_output = "-", c_to;
  convert->add_option("--input,-i", c_input, "Input file")->required();
  convert->add_option("--output,-o", c_output, "Output file");
  convert->add_option("--to", c_to, "Target format: sem | jsonl")
      ->required()
      ->check(CLI::IsMember({"sem", "jsonl"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*detect)
      return cmd_detect(d_input, d_output, d_rejects, d_lex, d_model,
                        d_gold_cues, d_baseline, d_baseline_all, d_trace);
    if (*train_cue) return cmd_train_cue(t_input, t_output, t_config);
    if (*evaluate) return cmd_evaluate(e_gold, e_pred, e_json);
    if (*transform)
      return cmd_transform(x_input, x_scopes, x_output, x_mode, x_antonyms,
                           !x_drop_cue, x_rejects);
    if (*agree) return cmd_agree(a_a, a_b, a_json);
    if (*convert) return cmd_convert(c_input, c_output, c_to);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
