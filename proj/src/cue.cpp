#include "negscope/cue.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace negscope {

namespace {

std::string to_lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

void FeatureVector::add(std::string name, double value) {
  for (const auto& [n, v] : features)
    if (n == name) throw std::invalid_argument("duplicate feature: " + name);
  features.emplace_back(std::move(name), value);
}

double FeatureVector::get(const std::string& name) const {
  for (const auto& [n, v] : features)
    if (n == name) return v;
  return 0.0;
}

std::vector<CueOccurrence> find_cues(const Sentence& sentence,
                                     const CueLexicon& lex) {
  std::vector<CueOccurrence> out;
  for (const Token& tok : sentence.tokens) {
    if (lex.contains(tok.norm))
      out.push_back(CueOccurrence{tok.index, tok.norm, true, 1.0});
  }
  return out;
}

FeatureVector extract_features(const Sentence& sentence,
                               const CueOccurrence& occ) {
  const auto& toks = sentence.tokens;
  const int n = static_cast<int>(toks.size());
  const int i = occ.token_index;
  if (i < 0 || i >= n)
    throw std::out_of_range("cue index " + std::to_string(i) + " out of range");

  const Token& tok = toks[i];
  FeatureVector x;
  x.add("wf=" + to_lower(tok.surface));
  x.add("pos=" + tok.pos);
  x.add("lemma=" + tok.lemma);
  x.add("prev_lemma=" + (i > 0 ? toks[i - 1].lemma : std::string("BOS")));
  x.add("next_lemma=" + (i + 1 < n ? toks[i + 1].lemma : std::string("EOS")));
  x.add("relpos", n > 1 ? static_cast<double>(i) / (n - 1) : 0.0);
  x.add("posbi_prev=" + (i > 0 ? toks[i - 1].pos : std::string("BOS")) + "|" +
        tok.pos);
  x.add("posbi_next=" + tok.pos + "|" +
        (i + 1 < n ? toks[i + 1].pos : std::string("EOS")));

  int last_nonpunct = -1;
  for (int k = n - 1; k >= 0; --k) {
    if (!is_punctuation(toks[k])) {
      last_nonpunct = k;
      break;
    }
  }
  if (i == last_nonpunct) x.add("sent_final");
  return x;
}

double LinearModel::weight(const std::string& name) const {
  auto it = weights_.find(name);
  return it == weights_.end() ? 0.0 : it->second;
}

double LinearModel::score(const FeatureVector& x) const {
  double z = bias_;
  for (const auto& [name, value] : x.features) z += weight(name) * value;
  return sigmoid(z);
}

LinearModel train(const std::vector<std::pair<FeatureVector, bool>>& corpus,
                  const TrainConfig& config) {
  if (corpus.empty()) throw std::invalid_argument("empty training corpus");
  bool has_true = false, has_false = false;
  for (const auto& [x, y] : corpus) (y ? has_true : has_false) = true;
  if (!has_true || !has_false)
    throw std::invalid_argument("training corpus has a single class");
  if (config.threshold <= 0.0 || config.threshold >= 1.0)
    throw std::invalid_argument("threshold must be in (0,1)");

  // Deterministic feature index: sorted names.
  std::map<std::string, int> index;
  for (const auto& [x, y] : corpus)
    for (const auto& [name, value] : x.features) index.emplace(name, 0);
  int next = 0;
  for (auto& [name, id] : index) id = next++;

  const int nfeat = next;
  std::vector<double> w(nfeat, 0.0);
  double bias = 0.0;

  // Pre-resolve sparse rows.
  struct Row {
    std::vector<std::pair<int, double>> x;
    double y;
    double cw;
  };
  std::vector<Row> rows;
  rows.reserve(corpus.size());
  for (const auto& [x, y] : corpus) {
    Row r;
    r.y = y ? 1.0 : 0.0;
    r.cw = y ? config.weight_true : config.weight_false;
    for (const auto& [name, value] : x.features)
      r.x.emplace_back(index.at(name), value);
    rows.push_back(std::move(r));
  }

  std::mt19937 rng(config.seed);
  std::vector<int> order(rows.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);

  const int batch = std::max(1, config.batch_size);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(batch)) {
      std::size_t stop = std::min(order.size(), start + batch);
      double gb = 0.0;
      std::vector<std::pair<int, double>> gx;
      for (std::size_t k = start; k < stop; ++k) {
        const Row& r = rows[order[k]];
        double z = bias;
        for (const auto& [j, v] : r.x) z += w[j] * v;
        double g = r.cw * (sigmoid(z) - r.y);
        gb += g;
        for (const auto& [j, v] : r.x) gx.emplace_back(j, g * v);
      }
      double scale = 1.0 / static_cast<double>(stop - start);
      // L2 shrinkage on all weights, then sparse gradient step.
      double shrink = 1.0 - config.learning_rate * config.l2;
      for (double& wj : w) wj *= shrink;
      for (const auto& [j, g] : gx) w[j] -= config.learning_rate * scale * g;
      bias -= config.learning_rate * scale * gb;
    }
  }

  // Weighted mean log loss + L2 penalty.
  double loss = 0.0, total_cw = 0.0;
  for (const Row& r : rows) {
    double z = bias;
    for (const auto& [j, v] : r.x) z += w[j] * v;
    double p = sigmoid(z);
    p = std::min(1.0 - 1e-15, std::max(1e-15, p));
    loss -= r.cw * (r.y * std::log(p) + (1.0 - r.y) * std::log(1.0 - p));
    total_cw += r.cw;
  }
  loss /= total_cw;
  double penalty = 0.0;
  for (double wj : w) penalty += wj * wj;
  loss += 0.5 * config.l2 * penalty;
  if (!std::isfinite(loss))
    throw std::runtime_error(
        "training diverged (non-finite loss); lower the learning rate");

  LinearModel model;
  model.bias_ = bias;
  model.threshold_ = config.threshold;
  for (const auto& [name, id] : index) model.weights_[name] = w[id];
  model.metadata_["seed"] = std::to_string(config.seed);
  model.metadata_["epochs"] = std::to_string(config.epochs);
  model.metadata_["batch_size"] = std::to_string(batch);
  model.metadata_["learning_rate"] = fmt_double(config.learning_rate);
  model.metadata_["l2"] = fmt_double(config.l2);
  model.metadata_["weight_true"] = fmt_double(config.weight_true);
  model.metadata_["weight_false"] = fmt_double(config.weight_false);
  model.metadata_["train_examples"] = std::to_string(corpus.size());
  model.metadata_["final_loss"] = fmt_double(loss);
  return model;
}

CueOccurrence classify(const LinearModel& model, const Sentence& sentence,
                       const CueOccurrence& occ) {
  CueOccurrence out = occ;
  out.score = model.score(extract_features(sentence, occ));
  out.is_true_cue = out.score >= model.threshold();
  return out;
}

void LinearModel::save(std::ostream& out) const {
  out << "negscope-linear-model v1\n";
  out << "threshold\t" << fmt_double(threshold_) << "\n";
  out << "bias\t" << fmt_double(bias_) << "\n";
  for (const auto& [k, v] : metadata_) out << "meta\t" << k << "\t" << v << "\n";
  out << "features\t" << weights_.size() << "\n";
  for (const auto& [name, weight] : weights_)
    out << name << "\t" << fmt_double(weight) << "\n";
}

void LinearModel::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  save(out);
}

[[noreturn]] static LinearModel load_fail(const std::string& why) {
  throw std::runtime_error("bad model file: " + why);
}

LinearModel LinearModel::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "negscope-linear-model v1")
    return load_fail("missing header");
  LinearModel model;
  long nfeat = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t t1 = line.find('\t');
    if (t1 == std::string::npos) return load_fail("malformed line: " + line);
    std::string key = line.substr(0, t1);
    if (key == "threshold") {
      model.threshold_ = std::strtod(line.c_str() + t1 + 1, nullptr);
    } else if (key == "bias") {
      model.bias_ = std::strtod(line.c_str() + t1 + 1, nullptr);
    } else if (key == "meta") {
      std::size_t t2 = line.find('\t', t1 + 1);
      if (t2 == std::string::npos) return load_fail("malformed meta line");
      model.metadata_[line.substr(t1 + 1, t2 - t1 - 1)] = line.substr(t2 + 1);
    } else if (key == "features") {
      nfeat = std::strtol(line.c_str() + t1 + 1, nullptr, 10);
      break;
    } else {
      return load_fail("unexpected key: " + key);
    }
  }
  if (nfeat < 0) return load_fail("missing feature section");
  for (long k = 0; k < nfeat; ++k) {
    if (!std::getline(in, line)) return load_fail("truncated feature section");
    std::size_t tab = line.rfind('\t');
    if (tab == std::string::npos) return load_fail("malformed feature line");
    model.weights_[line.substr(0, tab)] =
        std::strtod(line.c_str() + tab + 1, nullptr);
  }
  return model;
}

LinearModel LinearModel::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  return load(in);
}

}  // namespace negscope
