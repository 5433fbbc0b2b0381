#include "lyk/io/workspace.hpp"

#include <cctype>
#include <sstream>

#include "lyk/errors.hpp"

namespace lyk::io {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::algebra:
      return "algebra";
    case Kind::rep:
      return "rep";
    case Kind::cocycle:
      return "cocycle";
    case Kind::map:
      return "map";
    case Kind::pair:
      return "pair";
    case Kind::extension:
      return "extension";
  }
  return "?";
}

std::string print_scalar(const Scalar& s) { return s.str(); }

std::optional<Field> field_from_name(std::string_view name) {
  if (name == "Q") return Field::rationals();
  if (name.size() < 2 || name.size() > 10 || name[0] != 'F') return std::nullopt;
  if (name.find_first_not_of("0123456789", 1) != std::string_view::npos) return std::nullopt;
  const unsigned long long p = std::stoull(std::string(name.substr(1)));
  if (p > 0xffffffffULL || !is_prime_number(static_cast<std::uint32_t>(p))) return std::nullopt;
  return Field::prime(static_cast<std::uint32_t>(p));
}

// ---------------------------------------------------------------- workspace

bool Workspace::has(Kind k, const std::string& name) const {
  switch (k) {
    case Kind::algebra:
      return algebras.count(name) > 0;
    case Kind::rep:
      return reps.count(name) > 0;
    case Kind::cocycle:
      return cocycles.count(name) > 0;
    case Kind::map:
      return maps.count(name) > 0;
    case Kind::pair:
      return pairs.count(name) > 0;
    case Kind::extension:
      return extensions.count(name) > 0;
  }
  return false;
}

namespace {

void require(const Workspace& w, Kind k, const std::string& name) {
  if (!w.has(k, name)) throw InvalidInput("unknown " + to_string(k) + " '" + name + "'");
}

void fresh(const Workspace& w, Kind k, const std::string& name) {
  if (w.has(k, name)) throw InvalidInput(to_string(k) + " '" + name + "' declared twice");
}

}  // namespace

void Workspace::add_algebra(const std::string& name, LYAlgebra a) {
  fresh(*this, Kind::algebra, name);
  algebras.emplace(name, std::move(a));
  order.emplace_back(Kind::algebra, name);
}

void Workspace::add_rep(const std::string& name, RepDecl r) {
  fresh(*this, Kind::rep, name);
  require(*this, Kind::algebra, r.algebra);
  reps.emplace(name, std::move(r));
  order.emplace_back(Kind::rep, name);
}

void Workspace::add_cocycle(const std::string& name, CocycleDecl c) {
  fresh(*this, Kind::cocycle, name);
  require(*this, Kind::algebra, c.g);
  require(*this, Kind::algebra, c.h);
  cocycles.emplace(name, std::move(c));
  order.emplace_back(Kind::cocycle, name);
}

void Workspace::add_map(const std::string& name, Matrix m) {
  fresh(*this, Kind::map, name);
  maps.emplace(name, std::move(m));
  order.emplace_back(Kind::map, name);
}

void Workspace::add_pair(const std::string& name, PairDecl p) {
  fresh(*this, Kind::pair, name);
  require(*this, Kind::map, p.alpha);
  require(*this, Kind::map, p.beta);
  pairs.emplace(name, std::move(p));
  order.emplace_back(Kind::pair, name);
}

void Workspace::add_extension(const std::string& name, ExtensionDecl e) {
  fresh(*this, Kind::extension, name);
  if (!e.cocycle.empty()) {
    require(*this, Kind::cocycle, e.cocycle);
  } else {
    for (const auto* a : {&e.g, &e.h, &e.total}) require(*this, Kind::algebra, *a);
    for (const auto* m : {&e.i, &e.p, &e.s}) require(*this, Kind::map, *m);
  }
  extensions.emplace(name, std::move(e));
  order.emplace_back(Kind::extension, name);
}

ExtensionSpec Workspace::extension(const std::string& name) const {
  require(*this, Kind::extension, name);
  const ExtensionDecl& d = extensions.at(name);
  if (!d.cocycle.empty()) return build_extension(cocycles.at(d.cocycle).cocycle);
  ExtensionSpec e{algebras.at(d.g), algebras.at(d.h), algebras.at(d.total),
                  maps.at(d.i),     maps.at(d.p),     maps.at(d.s)};
  verify_extension(e);
  return e;
}

AutoPair Workspace::pair(const std::string& name) const {
  require(*this, Kind::pair, name);
  const PairDecl& d = pairs.at(name);
  return {maps.at(d.alpha), maps.at(d.beta)};
}

std::vector<Kind> Workspace::kinds_of(const std::string& name) const {
  std::vector<Kind> out;
  for (const auto& [k, n] : order)
    if (n == name) out.push_back(k);
  return out;
}

// ------------------------------------------------------------------ parsing

namespace {

struct Line {
  int number = 0;
  std::string text;  // comment stripped
};

struct Cursor {
  const Line& line;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line.number, static_cast<int>(pos) + 1, msg);
  }
  void skip_ws() {
    while (pos < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= line.text.size();
  }
  char peek() {
    skip_ws();
    return pos < line.text.size() ? line.text[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  std::string word() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < line.text.size()) {
      const char c = line.text[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') ++pos;
      else break;
    }
    if (pos == start) fail("expected a name");
    return line.text.substr(start, pos - start);
  }
  void keyword(const std::string& kw) {
    const std::size_t start = pos;
    if (word() != kw) {
      pos = start;
      skip_ws();
      fail("expected '" + kw + "'");
    }
  }
  int integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < line.text.size() && std::isdigit(static_cast<unsigned char>(line.text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    const std::string s = line.text.substr(start, pos - start);
    if (s.size() > 6) {
      pos = start;
      fail("integer too large");
    }
    return std::stoi(s);
  }
  // Unsigned "n" or "n/d".
  std::string number_text() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < line.text.size() && std::isdigit(static_cast<unsigned char>(line.text[pos]))) ++pos;
    if (pos < line.text.size() && line.text[pos] == '/') {
      ++pos;
      const std::size_t d = pos;
      while (pos < line.text.size() && std::isdigit(static_cast<unsigned char>(line.text[pos]))) ++pos;
      if (pos == d) fail("expected a denominator");
    }
    return line.text.substr(start, pos - start);
  }
  void finish() {
    if (!at_end()) fail("unexpected text");
  }
};

Scalar parse_scalar(Cursor& c, const Field& f, bool allow_sign) {
  c.skip_ws();
  const std::size_t start = c.pos;
  bool neg = false;
  if (allow_sign && (c.peek() == '-' || c.peek() == '+')) {
    neg = c.peek() == '-';
    ++c.pos;
  }
  const std::string t = c.number_text();
  if (t.empty()) {
    c.pos = start;
    c.skip_ws();
    c.fail("expected a scalar");
  }
  try {
    Scalar s = f.parse(t);
    return neg ? -s : s;
  } catch (const std::exception& e) {
    c.pos = start;
    c.skip_ws();
    c.fail(std::string("bad scalar: ") + e.what());
  }
}

// Σ c*e_k over a codomain of dimension `dim`; "0" is the empty sum.
Vec parse_terms(Cursor& c, const Field& f, int dim) {
  Vec v = zeros(f, dim);
  std::vector<bool> seen(dim, false);
  if (c.peek() == '0') {
    const std::size_t save = c.pos;
    c.skip_ws();
    ++c.pos;
    if (c.at_end()) return v;
    c.pos = save;
  }
  bool first = true;
  while (!c.at_end()) {
    bool neg = false;
    const char ch = c.peek();
    if (ch == '+' || ch == '-') {
      neg = ch == '-';
      ++c.pos;
    } else if (!first) {
      c.fail("expected '+' or '-'");
    }
    first = false;
    Scalar coef = f.one();
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coef = parse_scalar(c, f, false);
      if (c.peek() == '*') ++c.pos;
    }
    c.skip_ws();
    const std::size_t at = c.pos;
    if (c.peek() != 'e') c.fail("expected a basis vector e<k>");
    ++c.pos;
    if (c.pos < c.line.text.size() && c.line.text[c.pos] == '_') ++c.pos;
    const int k = c.integer();
    if (k < 1 || k > dim) {
      c.pos = at;
      c.fail("basis index out of range 1.." + std::to_string(dim));
    }
    if (seen[k - 1]) {
      c.pos = at;
      c.fail("e" + std::to_string(k) + " appears twice");
    }
    seen[k - 1] = true;
    v[k - 1] = neg ? -coef : coef;
  }
  if (first) c.fail("expected a sum of basis vectors");
  return v;
}

struct TensorSlot {
  std::string key;
  MultiMap* map;
};

// One `key[i,j,...] = terms` line into the matching slot.
void parse_entry(const Line& line, const Field& f, std::vector<TensorSlot>& slots,
                 std::vector<std::vector<bool>>& filled) {
  Cursor c{line};
  const std::string key = c.word();
  std::size_t idx = slots.size();
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (slots[k].key == key) idx = k;
  if (idx == slots.size()) {
    c.pos = 0;
    c.skip_ws();
    c.fail("unknown entry '" + key + "'");
  }
  MultiMap& m = *slots[idx].map;
  c.expect('[');
  std::vector<int> t;
  const std::size_t open = c.pos;
  for (int k = 0; k < m.arity(); ++k) {
    if (k) c.expect(',');
    const std::size_t at = c.pos;
    const int v = c.integer();
    if (v < 1 || v > m.dims_in()[k]) {
      c.pos = at;
      c.skip_ws();
      c.fail("index out of range 1.." + std::to_string(m.dims_in()[k]));
    }
    t.push_back(v - 1);
  }
  c.expect(']');
  c.expect('=');
  const std::size_t off = m.offset(t);
  if (filled[idx][off]) {
    c.pos = open;
    c.fail("entry given twice");
  }
  filled[idx][off] = true;
  const Vec v = parse_terms(c, f, m.dim_out());
  m.set_value(t, v);
}

class Parser {
 public:
  Parser(std::string_view text, std::optional<Field> field) : override_(std::move(field)) {
    std::size_t start = 0;
    int n = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string s(text.substr(start, end - start));
      if (!s.empty() && s.back() == '\r') s.pop_back();
      if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
      lines_.push_back({++n, s});
      start = end + 1;
    }
  }

  Workspace run() {
    Workspace w;
    bool have_field = false;
    while (next()) {
      const Line& line = lines_[cur_];
      Cursor c{line};
      const std::string head = c.word();
      if (!have_field) {
        if (head != "field") {
          c.pos = 0;
          c.skip_ws();
          c.fail("document must start with 'field'");
        }
        w.field = parse_field(c);
        c.finish();
        have_field = true;
        continue;
      }
      try {
        if (head == "algebra") algebra(w, c);
        else if (head == "rep") rep(w, c);
        else if (head == "cocycle") cocycle(w, c);
        else if (head == "map") map(w, c);
        else if (head == "pair") pair(w, c);
        else if (head == "extension") extension(w, c);
        else if (head == "field") c.fail("field declared twice");
        else {
          c.pos = 0;
          c.skip_ws();
          c.fail("unknown declaration '" + head + "'");
        }
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(line.number, 1, e.what());
      }
    }
    if (!have_field) throw ParseError(static_cast<int>(lines_.size()), 1, "missing 'field'");
    return w;
  }

 private:
  std::vector<Line> lines_;
  std::size_t cur_ = 0;
  bool started_ = false;
  std::optional<Field> override_;
  Field field_;

  // Advances to the next non-blank line.
  bool next() {
    std::size_t k = started_ ? cur_ + 1 : 0;
    started_ = true;
    while (k < lines_.size()) {
      Cursor c{lines_[k]};
      if (!c.at_end()) {
        cur_ = k;
        return true;
      }
      ++k;
    }
    cur_ = lines_.size();
    return false;
  }

  const Line& body_line(const std::string& what, int opened) {
    if (!next()) throw ParseError(opened, 1, what + " block is missing 'end'");
    return lines_[cur_];
  }

  static bool is_end(const Line& l) {
    Cursor c{l};
    if (c.peek() != 'e') return false;
    const std::string w = c.word();
    return w == "end" && c.at_end();
  }

  Field parse_field(Cursor& c) {
    c.skip_ws();
    const std::size_t at = c.pos;
    const std::string name = c.word();
    auto f = field_from_name(name);
    if (!f) {
      c.pos = at;
      c.fail("unknown field '" + name + "'");
    }
    field_ = override_ ? *override_ : *f;
    return field_;
  }

  void tensor_block(const std::string& what, int opened, std::vector<TensorSlot> slots) {
    std::vector<std::vector<bool>> filled;
    for (const auto& s : slots) filled.emplace_back(s.map->domain_size(), false);
    for (;;) {
      const Line& l = body_line(what, opened);
      if (is_end(l)) return;
      parse_entry(l, field_, slots, filled);
    }
  }

  int dim_of(Cursor& c) {
    c.keyword("dim");
    const std::size_t at = c.pos;
    const int n = c.integer();
    if (n < 0 || n > 64) {
      c.pos = at;
      c.fail("dimension out of range");
    }
    return n;
  }

  const LYAlgebra& algebra_ref(const Workspace& w, Cursor& c) {
    c.skip_ws();
    const std::size_t at = c.pos;
    const std::string n = c.word();
    if (!w.has(Kind::algebra, n)) {
      c.pos = at;
      c.fail("unknown algebra '" + n + "'");
    }
    return w.algebras.at(n);
  }

  void algebra(Workspace& w, Cursor& c) {
    const int opened = c.line.number;
    const std::string name = c.word();
    if (w.has(Kind::algebra, name)) c.fail("algebra '" + name + "' declared twice");
    const int n = dim_of(c);
    c.finish();
    LYAlgebra a(field_, n);
    tensor_block("algebra", opened, {{"b", &a.binary}, {"t", &a.ternary}});
    w.add_algebra(name, std::move(a));
  }

  void rep(Workspace& w, Cursor& c) {
    const int opened = c.line.number;
    const std::string name = c.word();
    if (w.has(Kind::rep, name)) c.fail("rep '" + name + "' declared twice");
    c.keyword("of");
    const std::size_t at = c.pos;
    const LYAlgebra& g = algebra_ref(w, c);
    c.pos = at;
    const std::string gname = c.word();
    const int n = dim_of(c);
    c.finish();
    Representation r(g, n);
    tensor_block("rep", opened, {{"mu", &r.mu}, {"theta", &r.theta}, {"D", &r.dee}});
    w.add_rep(name, {gname, std::move(r)});
  }

  void cocycle(Workspace& w, Cursor& c) {
    const int opened = c.line.number;
    const std::string name = c.word();
    if (w.has(Kind::cocycle, name)) c.fail("cocycle '" + name + "' declared twice");
    c.keyword("on");
    std::size_t at = c.pos;
    const LYAlgebra& g = algebra_ref(w, c);
    c.pos = at;
    const std::string gname = c.word();
    at = c.pos;
    const LYAlgebra& h = algebra_ref(w, c);
    c.pos = at;
    const std::string hname = c.word();
    c.finish();
    NonAbCocycle co(g, h);
    tensor_block("cocycle", opened,
                 {{"chi", &co.chi},
                  {"omega", &co.omega},
                  {"mu", &co.mu},
                  {"theta", &co.theta},
                  {"D", &co.dee},
                  {"rho", &co.rho},
                  {"T", &co.tee}});
    w.add_cocycle(name, {gname, hname, std::move(co)});
  }

  void map(Workspace& w, Cursor& c) {
    const int opened = c.line.number;
    const std::string name = c.word();
    if (w.has(Kind::map, name)) c.fail("map '" + name + "' declared twice");
    c.skip_ws();
    const std::size_t at = c.pos;
    const std::string shape = c.word();
    const auto x = shape.find('x');
    auto all_digits = [](const std::string& s) {
      return !s.empty() && s.size() < 4 && s.find_first_not_of("0123456789") == std::string::npos;
    };
    if (x == std::string::npos || !all_digits(shape.substr(0, x)) || !all_digits(shape.substr(x + 1))) {
      c.pos = at;
      c.fail("expected a shape RxC");
    }
    const int rows = std::stoi(shape.substr(0, x)), cols = std::stoi(shape.substr(x + 1));
    c.finish();
    Matrix m(field_, rows, cols);
    for (int r = 0; r < rows; ++r) {
      const Line& l = body_line("map", opened);
      if (is_end(l)) throw ParseError(l.number, 1, "map has " + std::to_string(rows) + " rows");
      Cursor rc{l};
      for (int k = 0; k < cols; ++k) m.at(r, k) = parse_scalar(rc, field_, true);
      if (!rc.at_end()) rc.fail("row has more than " + std::to_string(cols) + " entries");
    }
    const Line& l = body_line("map", opened);
    if (!is_end(l)) throw ParseError(l.number, 1, "expected 'end' after " + std::to_string(rows) + " rows");
    w.add_map(name, std::move(m));
  }

  std::string map_ref(const Workspace& w, Cursor& c) {
    c.skip_ws();
    const std::size_t at = c.pos;
    const std::string n = c.word();
    if (!w.has(Kind::map, n)) {
      c.pos = at;
      c.fail("unknown map '" + n + "'");
    }
    return n;
  }

  void pair(Workspace& w, Cursor& c) {
    const std::string name = c.word();
    if (w.has(Kind::pair, name)) c.fail("pair '" + name + "' declared twice");
    c.keyword("alpha");
    PairDecl d;
    d.alpha = map_ref(w, c);
    c.keyword("beta");
    d.beta = map_ref(w, c);
    c.finish();
    w.add_pair(name, d);
  }

  void extension(Workspace& w, Cursor& c) {
    const int opened = c.line.number;
    const std::string name = c.word();
    if (w.has(Kind::extension, name)) c.fail("extension '" + name + "' declared twice");
    ExtensionDecl d;
    if (!c.at_end()) {
      c.keyword("from");
      c.skip_ws();
      const std::size_t at = c.pos;
      d.cocycle = c.word();
      if (!w.has(Kind::cocycle, d.cocycle)) {
        c.pos = at;
        c.fail("unknown cocycle '" + d.cocycle + "'");
      }
      c.finish();
      w.add_extension(name, d);
      return;
    }
    const std::vector<std::pair<std::string, std::string*>> keys = {
        {"g", &d.g}, {"h", &d.h}, {"total", &d.total}, {"i", &d.i}, {"p", &d.p}, {"s", &d.s}};
    for (const auto& [key, slot] : keys) {
      const Line& l = body_line("extension", opened);
      Cursor kc{l};
      kc.keyword(key);
      kc.expect('=');
      kc.skip_ws();
      const std::size_t at = kc.pos;
      *slot = kc.word();
      const Kind kind = key == "g" || key == "h" || key == "total" ? Kind::algebra : Kind::map;
      if (!w.has(kind, *slot)) {
        kc.pos = at;
        kc.fail("unknown " + to_string(kind) + " '" + *slot + "'");
      }
      kc.finish();
    }
    const Line& l = body_line("extension", opened);
    if (!is_end(l)) throw ParseError(l.number, 1, "expected 'end'");
    w.add_extension(name, d);
  }
};

// ----------------------------------------------------------------- printing

std::string print_terms(const Vec& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    std::string c = v[k].str();
    std::string term = "e" + std::to_string(k + 1);
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (c != "1") term = c + "*" + term;
    if (out.empty()) out = neg ? "-" + term : term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

void print_tensor(std::ostringstream& os, const std::string& key, const MultiMap& m) {
  for (std::size_t off = 0; off < m.domain_size(); ++off) {
    const std::vector<int> t = m.unravel(off);
    const Vec v = m.value(t);
    if (is_zero(v)) continue;
    os << "  " << key << "[";
    for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k] + 1;
    os << "] = " << print_terms(v) << "\n";
  }
}

}  // namespace

Workspace parse_workspace(std::string_view text, std::optional<Field> field) {
  return Parser(text, std::move(field)).run();
}

std::string print_workspace(const Workspace& w) {
  std::ostringstream os;
  os << "field " << w.field.name() << "\n";
  for (const auto& [kind, name] : w.order) {
    os << "\n";
    switch (kind) {
      case Kind::algebra: {
        const LYAlgebra& a = w.algebras.at(name);
        os << "algebra " << name << " dim " << a.dim << "\n";
        print_tensor(os, "b", a.binary);
        print_tensor(os, "t", a.ternary);
        os << "end\n";
        break;
      }
      case Kind::rep: {
        const RepDecl& r = w.reps.at(name);
        os << "rep " << name << " of " << r.algebra << " dim " << r.rep.dim_v << "\n";
        print_tensor(os, "mu", r.rep.mu);
        print_tensor(os, "theta", r.rep.theta);
        print_tensor(os, "D", r.rep.dee);
        os << "end\n";
        break;
      }
      case Kind::cocycle: {
        const CocycleDecl& c = w.cocycles.at(name);
        os << "cocycle " << name << " on " << c.g << " " << c.h << "\n";
        print_tensor(os, "chi", c.cocycle.chi);
        print_tensor(os, "omega", c.cocycle.omega);
        print_tensor(os, "mu", c.cocycle.mu);
        print_tensor(os, "theta", c.cocycle.theta);
        print_tensor(os, "D", c.cocycle.dee);
        print_tensor(os, "rho", c.cocycle.rho);
        print_tensor(os, "T", c.cocycle.tee);
        os << "end\n";
        break;
      }
      case Kind::map: {
        const Matrix& m = w.maps.at(name);
        os << "map " << name << " " << m.rows() << "x" << m.cols() << "\n";
        for (int r = 0; r < m.rows(); ++r) {
          os << " ";
          for (int c = 0; c < m.cols(); ++c) os << " " << print_scalar(m.at(r, c));
          os << "\n";
        }
        os << "end\n";
        break;
      }
      case Kind::pair: {
        const PairDecl& p = w.pairs.at(name);
        os << "pair " << name << " alpha " << p.alpha << " beta " << p.beta << "\n";
        break;
      }
      case Kind::extension: {
        const ExtensionDecl& e = w.extensions.at(name);
        if (!e.cocycle.empty()) {
          os << "extension " << name << " from " << e.cocycle << "\n";
        } else {
          os << "extension " << name << "\n";
          os << "  g = " << e.g << "\n  h = " << e.h << "\n  total = " << e.total << "\n";
          os << "  i = " << e.i << "\n  p = " << e.p << "\n  s = " << e.s << "\nend\n";
        }
        break;
      }
    }
  }
  return os.str();
}

}  // namespace lyk::io
