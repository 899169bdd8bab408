#include "negscope/tree.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace negscope {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)),
      offset_(offset) {}

namespace {

bool is_delim(char c) {
  return c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c));
}

// "NP-SBJ-1" -> "NP", "PP=2" -> "PP"; labels starting with '-' (-NONE-,
// -LRB-, -RRB-) are kept verbatim.
std::string strip_function_tags(const std::string& label) {
  if (label.empty() || label.front() == '-') return label;
  std::size_t cut = label.find_first_of("-=");
  return cut == std::string::npos ? label : label.substr(0, cut);
}

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  std::unique_ptr<ParseNode> parse_root() {
    skip_ws();
    if (eof() || peek() != '(')
      throw ParseError("expected '('", clamp(pos_));
    auto root = parse_node(/*allow_unlabeled=*/true);
    skip_ws();
    if (!eof()) throw ParseError("trailing content", pos_);
    if (!root) throw ParseError("tree has no real tokens", 0);
    return root;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t clamp(std::size_t p) const {
    return text_.empty() ? 0 : std::min(p, text_.size() - 1);
  }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  std::string read_word() {
    std::size_t start = pos_;
    while (!eof() && !is_delim(peek())) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  // Returns nullptr for subtrees that contain no real tokens (-NONE-).
  std::unique_ptr<ParseNode> parse_node(bool allow_unlabeled) {
    std::size_t open = pos_;
    ++pos_;  // consume '('
    skip_ws();
    if (eof()) throw ParseError("unbalanced parentheses", clamp(pos_));

    std::string label = read_word();
    if (label.empty() && peek() != '(') {
      throw ParseError("empty constituent", open);
    }
    if (label.empty()) {
      if (!allow_unlabeled)
        throw ParseError("constituent label missing", open);
      label = "ROOT";
    }

    auto node = std::make_unique<ParseNode>();
    node->label = strip_function_tags(label);

    skip_ws();
    if (eof()) throw ParseError("unbalanced parentheses", clamp(pos_));

    if (peek() == ')') {
      ++pos_;
      throw ParseError("empty constituent", open);
    }

    if (peek() == '(') {
      while (true) {
        auto child = parse_node(/*allow_unlabeled=*/false);
        if (child) {
          child->parent = node.get();
          node->children.push_back(std::move(child));
        }
        skip_ws();
        if (eof()) throw ParseError("unbalanced parentheses", clamp(pos_));
        if (peek() == ')') {
          ++pos_;
          break;
        }
        if (peek() != '(')
          throw ParseError("unexpected token inside constituent", pos_);
      }
      if (node->children.empty()) return nullptr;  // all -NONE-
      return node;
    }

    // Preterminal: single terminal word, then ')'.
    node->leaf_text = read_word();
    skip_ws();
    if (eof()) throw ParseError("unbalanced parentheses", clamp(pos_));
    if (peek() != ')')
      throw ParseError("expected ')' after terminal", pos_);
    ++pos_;
    if (node->label == "-NONE-") return nullptr;
    return node;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void collect_leaves(ParseNode* node, std::vector<const ParseNode*>* leaves,
                    int* next_index) {
  if (node->is_leaf()) {
    node->span_begin = *next_index;
    node->span_end = ++*next_index;
    leaves->push_back(node);
    return;
  }
  for (auto& child : node->children)
    collect_leaves(child.get(), leaves, next_index);
  node->span_begin = node->children.front()->span_begin;
  node->span_end = node->children.back()->span_end;
}

void write_bracketed(const ParseNode& node, std::ostream& out) {
  out << '(' << node.label;
  if (node.is_leaf()) {
    out << ' ' << node.leaf_text;
  } else {
    for (const auto& child : node.children) {
      out << ' ';
      write_bracketed(*child, out);
    }
  }
  out << ')';
}

}  // namespace

ParseTree parse_bracketed(const std::string& text) {
  ParseTree tree;
  tree.root_ = Reader(text).parse_root();
  int next = 0;
  collect_leaves(tree.root_.get(), &tree.leaves_, &next);
  return tree;
}

const ParseNode* ParseTree::ancestor_with_tag(
    int leaf_index, const std::vector<std::string>& accepted) const {
  if (leaf_index < 0 || leaf_index >= static_cast<int>(leaves_.size()))
    throw std::out_of_range("leaf index " + std::to_string(leaf_index) +
                            " out of range");
  for (const ParseNode* node = leaves_[leaf_index]->parent; node;
       node = node->parent) {
    for (const std::string& pat : accepted) {
      if (!pat.empty() && pat.back() == '*') {
        if (node->label.compare(0, pat.size() - 1, pat, 0, pat.size() - 1) ==
            0)
          return node;
      } else if (node->label == pat) {
        return node;
      }
    }
  }
  return nullptr;
}

std::string ParseTree::to_bracketed() const {
  std::ostringstream out;
  write_bracketed(*root_, out);
  return out.str();
}

Sentence align(std::shared_ptr<const ParseTree> tree, std::vector<Token> tokens,
               std::string source_id) {
  if (!tree) throw AlignError("no tree given");
  const auto& leaves = tree->leaves();
  if (leaves.size() != tokens.size())
    throw AlignError("leaf/token count mismatch: " +
                     std::to_string(leaves.size()) + " leaves vs " +
                     std::to_string(tokens.size()) + " tokens");
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (leaves[i]->leaf_text != tokens[i].surface)
      throw AlignError("surface mismatch at index " + std::to_string(i) +
                       ": leaf \"" + leaves[i]->leaf_text + "\" vs token \"" +
                       tokens[i].surface + "\"");
  }
  Sentence sent;
  sent.tokens = std::move(tokens);
  sent.tree = std::move(tree);
  sent.source_id = std::move(source_id);
  return sent;
}

}  // namespace negscope
