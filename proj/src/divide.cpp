#include "divides/divide.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "divides/errors.hpp"

namespace divides {

const Branch& Divide::branch_by_id(int id) const {
  for (const Branch& b : branches)
    if (b.id == id) return b;
  throw DomainError("no branch with id " + std::to_string(id));
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line;

  int col() const { return static_cast<int>(pos) + 1; }
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  void skip_ws() {
    while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col(), msg); }

  void expect(char c) {
    skip_ws();
    if (done() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  double number() {
    skip_ws();
    if (done()) fail("expected number");
    size_t consumed = 0;
    double v;
    try {
      v = std::stod(s.substr(pos), &consumed);
    } catch (const std::exception&) {
      fail("expected number");
    }
    pos += consumed;
    return v;
  }

  long integer() {
    skip_ws();
    if (done()) fail("expected integer");
    size_t consumed = 0;
    long v;
    try {
      v = std::stol(s.substr(pos), &consumed, 10);
    } catch (const std::exception&) {
      fail("expected integer");
    }
    pos += consumed;
    return v;
  }

  std::string word() {
    skip_ws();
    size_t start = pos;
    while (!done() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    return s.substr(start, pos - start);
  }
};

std::string strip_comment(const std::string& line) {
  size_t h = line.find('#');
  std::string out = (h == std::string::npos) ? line : line.substr(0, h);
  if (!out.empty() && out.back() == '\r') out.pop_back();
  return out;
}

bool blank(const std::string& line) {
  for (char c : line)
    if (c != ' ' && c != '\t') return false;
  return true;
}

void validate_branch(Branch& b, int line_no) {
  constexpr double on_circle_tol = 1e-6;
  constexpr double inside = 1.0 - 1e-6;

  if (b.kind == BranchKind::circle && b.control_points.size() >= 2) {
    // closed control polygon may repeat the first point; store it once
    if (dist(b.control_points.front(), b.control_points.back()) < 1e-12)
      b.control_points.pop_back();
  }
  if (b.control_points.size() < 4) throw ParseError(line_no, 0, "too few control points (need 4)");

  const size_t n = b.control_points.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = b.control_points[i];
    const bool endpoint = b.kind == BranchKind::arc && (i == 0 || i == n - 1);
    if (endpoint) {
      if (std::abs(p.norm() - 1.0) > on_circle_tol)
        throw ParseError(line_no, 0, "endpoint-off-circle: arc endpoints must lie on the unit circle");
    } else {
      if (p.norm() >= inside)
        throw ParseError(line_no, 0, "control point not strictly inside the unit disk");
    }
    if (p.norm2() > 1.0 + 1e-9)
      throw ParseError(line_no, 0, "control point outside the closed unit disk");
  }
}

}  // namespace

Divide parse_divide(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool saw_header = false;
  Divide d;
  std::set<int> ids;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (blank(line)) continue;

    if (!saw_header) {
      Cursor c{line, 0, line_no};
      if (c.word() != "divide") c.fail("expected 'divide v1' header");
      if (c.word() != "v1") c.fail("unsupported format version (expected v1)");
      c.skip_ws();
      if (!c.done()) c.fail("trailing characters after header");
      saw_header = true;
      continue;
    }

    Cursor c{line, 0, line_no};
    std::string kind = c.word();
    Branch b;
    if (kind == "arc")
      b.kind = BranchKind::arc;
    else if (kind == "circle")
      b.kind = BranchKind::circle;
    else
      c.fail("expected 'arc' or 'circle'");

    b.id = static_cast<int>(c.integer());
    c.expect(':');
    for (;;) {
      c.skip_ws();
      if (c.done()) break;
      c.expect('(');
      double x = c.number();
      c.expect(',');
      double y = c.number();
      c.expect(')');
      b.control_points.push_back({x, y});
    }
    if (!ids.insert(b.id).second) c.fail("duplicate branch id " + std::to_string(b.id));
    validate_branch(b, line_no);
    d.branches.push_back(std::move(b));
  }

  if (!saw_header) throw ParseError(1, 0, "missing 'divide v1' header");
  if (d.branches.empty()) throw ParseError(line_no, 0, "no branches");
  return d;
}

Divide load_divide(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_divide(ss.str());
}

std::string write_divide(const Divide& d) {
  std::ostringstream out;
  out << "divide v1\n";
  char buf[64];
  for (const Branch& b : d.branches) {
    out << (b.kind == BranchKind::arc ? "arc " : "circle ") << b.id << ":";
    for (const Vec2& p : b.control_points) {
      std::snprintf(buf, sizeof buf, " (%.17g,%.17g)", p.x, p.y);
      out << buf;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace divides
