#ifndef NEGSCOPE_TREE_HPP
#define NEGSCOPE_TREE_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "negscope/token.hpp"

namespace negscope {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class AlignError : public std::runtime_error {
 public:
  explicit AlignError(const std::string& what) : std::runtime_error(what) {}
};

/// One constituent. Leaves are preterminals: label is the POS tag and
/// leaf_text the surface word. Spans are half-open token intervals.
struct ParseNode {
  std::string label;
  std::string leaf_text;  // leaves only
  std::vector<std::unique_ptr<ParseNode>> children;
  const ParseNode* parent = nullptr;
  int span_begin = 0;
  int span_end = 0;

  bool is_leaf() const { return children.empty(); }
};

class ParseTree {
 public:
  const ParseNode& root() const { return *root_; }
  const std::vector<const ParseNode*>& leaves() const { return leaves_; }
  const ParseNode* parent_of(const ParseNode& node) const {
    return node.parent;
  }

  /// Nearest strict ancestor of leaves()[leaf_index] whose label matches one
  /// of the patterns (exact tag, or "TAG*" prefix class); nullptr if none.
  const ParseNode* ancestor_with_tag(
      int leaf_index, const std::vector<std::string>& accepted) const;

  std::string to_bracketed() const;

 private:
  friend ParseTree parse_bracketed(const std::string& text);
  std::unique_ptr<ParseNode> root_;
  std::vector<const ParseNode*> leaves_;
};

/// Reads a PTB-style labeled bracketing. Functional tags after "-"/"=" are
/// stripped ("NP-SBJ" -> "NP"), "-NONE-" empty elements are dropped, and an
/// unlabeled outer wrapper becomes a node labeled "ROOT".
ParseTree parse_bracketed(const std::string& text);

struct Sentence {
  std::vector<Token> tokens;
  std::shared_ptr<const ParseTree> tree;  // optional
  std::string source_id;
};

/// Pairs a tree with its token sequence; byte equality between each leaf
/// text and the token surface is required.
Sentence align(std::shared_ptr<const ParseTree> tree,
               std::vector<Token> tokens, std::string source_id = "");

}  // namespace negscope

#endif
