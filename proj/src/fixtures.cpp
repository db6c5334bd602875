#include <fstream>
#include <sstream>

#include "hyperbernardi/harness.hpp"

namespace hb {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

Provenance parse_provenance(const std::string& s, int line) {
  if (s == "paper-exact") return Provenance::PaperExact;
  if (s == "figure-transcription") return Provenance::FigureTranscription;
  if (s == "derived") return Provenance::Derived;
  throw InputError("line " + std::to_string(line) + ": unknown provenance '" + s + "'");
}

}  // namespace

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::PaperExact: return "paper-exact";
    case Provenance::FigureTranscription: return "figure-transcription";
    case Provenance::Derived: return "derived";
  }
  return "?";
}

const Expectation* Fixture::find(const std::string& key) const {
  for (const auto& e : expected)
    if (e.key == key) return &e;
  return nullptr;
}

Fixture parse_fixture(const std::string& text) {
  Fixture fx;
  fx.document = text;
  bool have_provenance = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.rfind("#@", 0) != 0) continue;
    s = trim(s.substr(2));
    std::string word = s.substr(0, s.find(' '));
    std::string rest = word.size() < s.size() ? trim(s.substr(word.size())) : "";
    if (word == "fixture") {
      fx.name = rest;
    } else if (word == "provenance") {
      fx.provenance = parse_provenance(rest, line);
      have_provenance = true;
    } else if (word == "note") {
      fx.notes.push_back(rest);
    } else if (word == "expect") {
      size_t eq = rest.find('=');
      size_t lb = rest.rfind('[');
      size_t rb = rest.rfind(']');
      if (eq == std::string::npos) throw InputError("line " + std::to_string(line) + ": expect needs KEY = VALUE");
      if (lb == std::string::npos || rb == std::string::npos || rb < lb || lb < eq)
        throw InputError("line " + std::to_string(line) + ": expected value without provenance tag");
      Expectation e;
      e.key = trim(rest.substr(0, eq));
      e.value = trim(rest.substr(eq + 1, lb - eq - 1));
      e.tag = parse_provenance(trim(rest.substr(lb + 1, rb - lb - 1)), line);
      if (fx.find(e.key)) throw InputError("line " + std::to_string(line) + ": duplicate expectation " + e.key);
      fx.expected.push_back(e);
    } else {
      throw InputError("line " + std::to_string(line) + ": unknown fixture directive '" + word + "'");
    }
  }
  if (fx.name.empty()) throw InputError("fixture has no name");
  if (!have_provenance) throw InputError("fixture " + fx.name + " has no provenance");
  fx.graph();  // validate the document now
  return fx;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_fixture(ss.str());
}

}  // namespace hb
