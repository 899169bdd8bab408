#include "negscope/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace negscope {

using nlohmann::json;

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error("bad corpus record: " + what);
}

std::vector<int> int_array(const json& j, const std::string& what) {
  require(j.is_array(), what + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    require(v.is_number_integer(), what + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

CorpusRecord parse_corpus_record(const std::string& line) {
  CorpusRecord rec;
  rec.raw = json::parse(line);
  require(rec.raw.is_object(), "line is not a JSON object");
  rec.id = rec.raw.value("id", "");

  require(rec.raw.contains("tokens") && rec.raw["tokens"].is_array(),
          "missing tokens array");
  int idx = 0;
  for (const auto& t : rec.raw["tokens"]) {
    require(t.is_object() && t.contains("surface"),
            "token missing surface field");
    rec.tokens.emplace_back(idx++, t["surface"].get<std::string>(),
                            t.value("lemma", ""), t.value("pos", ""));
  }
  const int n = idx;

  if (rec.raw.contains("parse") && !rec.raw["parse"].is_null())
    rec.parse = rec.raw["parse"].get<std::string>();

  if (rec.raw.contains("gold_cues")) {
    rec.has_gold_cues = true;
    for (const auto& c : rec.raw["gold_cues"]) {
      GoldCueLabel label;
      label.index = c.at("index").get<int>();
      label.is_true_cue = c.value("is_true_cue", true);
      require(label.index >= 0 && label.index < n,
              "gold cue index out of range");
      rec.gold_cues.push_back(label);
    }
  }
  if (rec.raw.contains("gold_scopes")) {
    rec.has_gold_scopes = true;
    for (const auto& s : rec.raw["gold_scopes"]) {
      GoldScopeLabel label;
      label.cue_index = s.at("cue_index").get<int>();
      label.token_indices = int_array(s.at("token_indices"), "token_indices");
      require(label.cue_index >= 0 && label.cue_index < n,
              "gold scope cue index out of range");
      for (int i : label.token_indices)
        require(i >= 0 && i < n, "gold scope token index out of range");
      rec.gold_scopes.push_back(label);
    }
  }
  return rec;
}

json corpus_record_to_json(const CorpusRecord& record) {
  json out = record.raw.is_object() ? record.raw : json::object();
  out["id"] = record.id;
  if (!out.contains("tokens")) {
    json toks = json::array();
    for (const Token& t : record.tokens) {
      json tok{{"surface", t.surface}, {"pos", t.pos}};
      if (!t.lemma.empty() && t.lemma != t.norm) tok["lemma"] = t.lemma;
      toks.push_back(std::move(tok));
    }
    out["tokens"] = std::move(toks);
  }
  if (record.parse)
    out["parse"] = *record.parse;
  else
    out.erase("parse");
  if (record.has_gold_cues) {
    json cues = json::array();
    for (const auto& c : record.gold_cues)
      cues.push_back({{"index", c.index}, {"is_true_cue", c.is_true_cue}});
    out["gold_cues"] = std::move(cues);
  }
  if (record.has_gold_scopes) {
    json scopes = json::array();
    for (const auto& s : record.gold_scopes)
      scopes.push_back(
          {{"cue_index", s.cue_index}, {"token_indices", s.token_indices}});
    out["gold_scopes"] = std::move(scopes);
  }
  return out;
}

Sentence to_sentence(const CorpusRecord& record) {
  if (record.parse) {
    auto tree = std::make_shared<ParseTree>(parse_bracketed(*record.parse));
    return align(std::move(tree), record.tokens, record.id);
  }
  Sentence sent;
  sent.tokens = record.tokens;
  sent.source_id = record.id;
  return sent;
}

json scope_record_to_json(const ScopeRecord& record) {
  json out{{"id", record.id},
           {"cue_index", record.cue_index},
           {"cue_form", record.cue_form},
           {"is_true_cue", record.is_true_cue},
           {"score", record.score},
           {"scope", record.scope}};
  if (record.with_trace) {
    json trace = json::array();
    for (const auto& r : record.trace)
      trace.push_back(
          {{"rule", r.rule}, {"before", r.before}, {"after", r.after}});
    out["trace"] = std::move(trace);
  }
  return out;
}

ScopeRecord parse_scope_record(const std::string& line) {
  json j = json::parse(line);
  ScopeRecord rec;
  rec.id = j.value("id", "");
  rec.cue_index = j.at("cue_index").get<int>();
  rec.cue_form = j.value("cue_form", "");
  rec.is_true_cue = j.value("is_true_cue", true);
  rec.score = j.value("score", 1.0);
  rec.scope = int_array(j.at("scope"), "scope");
  if (j.contains("trace")) {
    rec.with_trace = true;
    for (const auto& t : j["trace"]) {
      RuleApplication r;
      r.rule = t.at("rule").get<std::string>();
      r.before = int_array(t.at("before"), "trace before");
      r.after = int_array(t.at("after"), "trace after");
      rec.trace.push_back(std::move(r));
    }
  }
  return rec;
}

std::vector<std::string> read_lines_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

namespace {

// Per-token parse bits: "(S(NP*" style, '*' standing for the preterminal.
std::vector<std::string> parse_bits(const ParseTree& tree) {
  std::vector<std::string> bits(tree.leaves().size());
  struct Walker {
    std::vector<std::string>& bits;
    void walk(const ParseNode& node) {
      if (node.is_leaf()) {
        bits[node.span_begin] += "*";
        return;
      }
      bits[node.span_begin] += "(" + node.label;
      for (const auto& child : node.children) walk(*child);
      bits[node.span_end - 1] += ")";
    }
  } walker{bits};
  walker.walk(tree.root());
  return bits;
}

std::string rebuild_parse(const std::vector<std::string>& bits,
                          const std::vector<Token>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    for (char c : bits[i]) {
      if (c == '*')
        out += "(" + tokens[i].pos + " " + tokens[i].surface + ")";
      else
        out += c;
    }
  }
  return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

std::string to_sem_columns(const std::vector<CorpusRecord>& records) {
  std::ostringstream out;
  for (const CorpusRecord& rec : records) {
    std::vector<std::string> bits;
    if (rec.parse) {
      ParseTree tree = parse_bracketed(*rec.parse);
      if (tree.leaves().size() != rec.tokens.size())
        throw std::runtime_error("record " + rec.id +
                                 ": parse does not align with tokens");
      bits = parse_bits(tree);
    }
    std::vector<GoldCueLabel> cues = rec.gold_cues;
    std::map<int, std::vector<int>> scope_of;
    for (const auto& s : rec.gold_scopes)
      scope_of[s.cue_index] = s.token_indices;

    for (std::size_t i = 0; i < rec.tokens.size(); ++i) {
      const Token& tok = rec.tokens[i];
      out << rec.id << '\t' << i << '\t' << tok.surface << '\t' << tok.lemma
          << '\t' << tok.pos << '\t' << (bits.empty() ? "_" : bits[i]);
      if (rec.has_gold_cues) {
        if (cues.empty()) {
          out << "\t***";
        } else {
          for (const auto& c : cues) {
            bool is_site = static_cast<int>(i) == c.index;
            out << '\t'
                << (is_site ? (c.is_true_cue ? tok.surface : "F:" + tok.surface)
                            : std::string("_"));
            const auto it = scope_of.find(c.index);
            bool in_scope =
                it != scope_of.end() &&
                std::find(it->second.begin(), it->second.end(),
                          static_cast<int>(i)) != it->second.end();
            out << '\t' << (in_scope ? tok.surface : std::string("_"));
          }
        }
      }
      out << '\n';
    }
    out << '\n';
  }
  return out.str();
}

std::vector<CorpusRecord> from_sem_columns(const std::string& text) {
  std::vector<CorpusRecord> records;
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> block;

  auto flush = [&]() {
    if (block.empty()) return;
    CorpusRecord rec;
    rec.id = block[0][0];
    std::vector<std::string> bits;
    bool has_parse = false;
    std::size_t ncols = block[0].size();
    bool annotated = ncols > 6;
    std::size_t npairs = annotated && block[0][6] != "***" ? (ncols - 6) / 2 : 0;
    std::vector<GoldCueLabel> cues(npairs);
    std::vector<std::vector<int>> scopes(npairs);
    std::vector<bool> cue_seen(npairs, false);

    for (std::size_t i = 0; i < block.size(); ++i) {
      const auto& f = block[i];
      if (f.size() != ncols)
        throw std::runtime_error("sem import: ragged columns in sentence " +
                                 rec.id);
      rec.tokens.emplace_back(static_cast<int>(i), f[2], f[3], f[4]);
      if (f[5] != "_") has_parse = true;
      bits.push_back(f[5]);
      for (std::size_t k = 0; k < npairs; ++k) {
        const std::string& cue_col = f[6 + 2 * k];
        const std::string& scope_col = f[7 + 2 * k];
        if (cue_col != "_") {
          cues[k].index = static_cast<int>(i);
          cues[k].is_true_cue = cue_col.rfind("F:", 0) != 0;
          cue_seen[k] = true;
        }
        if (scope_col != "_") scopes[k].push_back(static_cast<int>(i));
      }
    }
    if (has_parse) rec.parse = rebuild_parse(bits, rec.tokens);
    if (annotated) {
      rec.has_gold_cues = true;
      rec.has_gold_scopes = true;
      for (std::size_t k = 0; k < npairs; ++k) {
        if (!cue_seen[k])
          throw std::runtime_error("sem import: cue column " +
                                   std::to_string(k) +
                                   " has no cue token in sentence " + rec.id);
        rec.gold_cues.push_back(cues[k]);
        rec.gold_scopes.push_back(GoldScopeLabel{cues[k].index, scopes[k]});
      }
    }
    rec.raw = corpus_record_to_json(rec);
    records.push_back(std::move(rec));
    block.clear();
  };

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    auto fields = split_tabs(line);
    if (fields.size() < 6)
      throw std::runtime_error("sem import: expected at least 6 columns, got " +
                               std::to_string(fields.size()));
    block.push_back(std::move(fields));
  }
  flush();
  return records;
}

}  // namespace negscope
