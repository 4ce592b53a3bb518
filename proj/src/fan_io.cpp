#include "toric/fan_io.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <regex>

#include <json.hpp>

namespace toric {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message
                 : message),
      line_(line),
      column_(column) {}

namespace {

// Minimal document tree; numbers keep their decimal text.
struct Node {
  enum class Kind { object, array, integer, other };
  Kind kind = Kind::other;
  std::string text;  // integer digits, or a type name for `other`
  std::vector<std::pair<std::string, Node>> members;
  std::vector<Node> items;
};

class TreeBuilder {
 public:
  using json = nlohmann::json;

  explicit TreeBuilder(std::string_view source) : source_(source) {}

  bool null() { return leaf(Node::Kind::other, "null"); }
  bool boolean(bool) { return leaf(Node::Kind::other, "boolean"); }
  bool number_integer(json::number_integer_t v) { return leaf(Node::Kind::integer, std::to_string(v)); }
  bool number_unsigned(json::number_unsigned_t v) { return leaf(Node::Kind::integer, std::to_string(v)); }
  bool number_float(json::number_float_t, const std::string& raw) {
    static const std::regex integer_text("-?[0-9]+");
    if (std::regex_match(raw, integer_text)) return leaf(Node::Kind::integer, raw);
    return leaf(Node::Kind::other, "non-integer number " + raw);
  }
  bool string(std::string&) { return leaf(Node::Kind::other, "string"); }
  bool binary(json::binary_t&) { return leaf(Node::Kind::other, "binary"); }
  bool start_object(std::size_t) { return open(Node::Kind::object); }
  bool key(std::string& k) {
    pending_key_ = k;
    return true;
  }
  bool end_object() { return close(); }
  bool start_array(std::size_t) { return open(Node::Kind::array); }
  bool end_array() { return close(); }

  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min(position ? position - 1 : 0, source_.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (source_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = ex.what();
    // drop nlohmann's "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix
    if (auto colon = what.find(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError(what, line, column);
  }

  Node take() { return std::move(root_); }

 private:
  bool attach(Node node) {
    if (stack_.empty()) {
      root_ = std::move(node);
      return true;
    }
    Node& parent = *stack_.back();
    if (parent.kind == Node::Kind::object) {
      for (const auto& [k, v] : parent.members)
        if (k == pending_key_) throw ParseError("duplicate key '" + k + "'", 0, 0);
      parent.members.emplace_back(pending_key_, std::move(node));
    } else {
      parent.items.push_back(std::move(node));
    }
    return true;
  }

  bool leaf(Node::Kind kind, std::string text) {
    Node n;
    n.kind = kind;
    n.text = std::move(text);
    return attach(std::move(n));
  }

  bool open(Node::Kind kind) {
    // Children are built in place; keep owned nodes separately until closed.
    open_nodes_.push_back(std::make_unique<Node>());
    open_nodes_.back()->kind = kind;
    keys_.push_back(pending_key_);
    stack_.push_back(open_nodes_.back().get());
    return true;
  }

  bool close() {
    Node done = std::move(*open_nodes_.back());
    open_nodes_.pop_back();
    stack_.pop_back();
    pending_key_ = keys_.back();
    keys_.pop_back();
    return attach(std::move(done));
  }

  std::string_view source_;
  Node root_;
  std::vector<Node*> stack_;
  std::vector<std::unique_ptr<Node>> open_nodes_;
  std::vector<std::string> keys_;
  std::string pending_key_;
};

[[noreturn]] void schema_error(const std::string& message) { throw ParseError(message, 0, 0); }

std::string describe(const Node& n) {
  switch (n.kind) {
    case Node::Kind::object:
      return "object";
    case Node::Kind::array:
      return "array";
    case Node::Kind::integer:
      return "integer";
    case Node::Kind::other:
      return n.text;
  }
  return "value";
}

const Node& expect(const Node& n, Node::Kind kind, const std::string& where) {
  if (n.kind != kind) {
    const char* wanted = kind == Node::Kind::array ? "an array" : kind == Node::Kind::integer ? "an integer" : "an object";
    schema_error(where + " must be " + wanted + ", found " + describe(n));
  }
  return n;
}

std::size_t to_index(const Node& n, const std::string& where) {
  expect(n, Node::Kind::integer, where);
  Integer v(n.text);
  if (v < 0 || !v.fits_ulong_p()) schema_error(where + " must be a non-negative index, found " + n.text);
  return v.get_ui();
}

}  // namespace

Fan parse_fan_unchecked(std::string_view text) {
  TreeBuilder builder(text);
  nlohmann::json::sax_parse(text.begin(), text.end(), &builder);
  const Node root = builder.take();
  expect(root, Node::Kind::object, "document");

  const Node* rank = nullptr;
  const Node* rays = nullptr;
  const Node* cones = nullptr;
  for (const auto& [key, value] : root.members) {
    if (key == "rank")
      rank = &value;
    else if (key == "rays")
      rays = &value;
    else if (key == "max_cones")
      cones = &value;
    else
      schema_error("unknown key '" + key + "'");
  }
  if (!rank) schema_error("missing key 'rank'");
  if (!rays) schema_error("missing key 'rays'");
  if (!cones) schema_error("missing key 'max_cones'");

  Fan fan;
  fan.rank = to_index(*rank, "rank");
  expect(*rays, Node::Kind::array, "rays");
  for (std::size_t i = 0; i < rays->items.size(); ++i) {
    const std::string where = "rays[" + std::to_string(i) + "]";
    const Node& r = expect(rays->items[i], Node::Kind::array, where);
    std::vector<Integer> coords;
    for (std::size_t j = 0; j < r.items.size(); ++j) {
      const Node& c = expect(r.items[j], Node::Kind::integer, where + "[" + std::to_string(j) + "]");
      coords.emplace_back(c.text);
    }
    fan.rays.emplace_back(std::move(coords));
  }
  expect(*cones, Node::Kind::array, "max_cones");
  for (std::size_t i = 0; i < cones->items.size(); ++i) {
    const std::string where = "max_cones[" + std::to_string(i) + "]";
    const Node& c = expect(cones->items[i], Node::Kind::array, where);
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < c.items.size(); ++j)
      idx.push_back(to_index(c.items[j], where + "[" + std::to_string(j) + "]"));
    fan.max_cones.emplace_back(std::move(idx));
  }
  return fan;
}

Fan parse_fan(std::string_view text) {
  Fan fan = parse_fan_unchecked(text);
  require_valid(fan);
  return fan;
}

Fan canonicalize(const Fan& fan) {
  std::vector<std::size_t> order(fan.rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fan.rays[a] < fan.rays[b]; });
  std::vector<std::size_t> new_index(fan.rays.size());
  Fan out;
  out.rank = fan.rank;
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[order[k]] = k;
    out.rays.push_back(fan.rays[order[k]]);
  }
  for (const auto& c : fan.max_cones) {
    std::vector<std::size_t> idx;
    for (std::size_t r : c.rays) idx.push_back(r < new_index.size() ? new_index[r] : r);
    out.max_cones.emplace_back(std::move(idx));
  }
  std::sort(out.max_cones.begin(), out.max_cones.end());
  return out;
}

std::string serialize_fan(const Fan& fan) {
  const Fan c = canonicalize(fan);
  std::string out = "{\"rank\":" + std::to_string(c.rank) + ",\"rays\":[";
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < c.rays[i].rank(); ++j) {
      if (j) out += ",";
      out += c.rays[i][j].get_str();
    }
    out += "]";
  }
  out += "],\"max_cones\":[";
  for (std::size_t i = 0; i < c.max_cones.size(); ++i) {
    if (i) out += ",";
    out += to_string(c.max_cones[i]);
  }
  return out + "]}";
}

}  // namespace toric
