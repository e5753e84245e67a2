#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "splitring/certificate.hpp"
#include "splitring/element.hpp"
#include "splitring/encode.hpp"
#include "splitring/euclid.hpp"
#include "splitring/tower.hpp"

namespace splitring {

// One interactive or scripted session: an adjunction tower plus named
// bindings. Commands are single lines, verb first; `#` starts a comment.
// Binding values are ring elements, certificates, or localized fractions.
class Session {
 public:
  using Binding = std::variant<Element, Certificate, LocalElement>;

  // Executes one command line and returns the rendered output (LF-terminated
  // lines; empty for blank and comment lines). A failing command prints
  // "error: <code>: <detail>" and leaves the session exactly as it was:
  // registry appends and bindings are kept only on success.
  std::string execute(const std::string& line);

  bool quit_requested() const { return quit_; }

  const Tower& tower() const { return tower_; }
  const std::vector<std::pair<std::string, Binding>>& bindings() const {
    return bindings_;
  }

  // Canonical state dump: the tower event log followed by one LET line per
  // binding in creation order. `load` replays exactly this text; `save` and
  // the argumentless `show` command emit it.
  void save(std::ostream& out) const;
  void load(std::istream& in);

 private:
  std::string dispatch(const std::string& verb,
                       const std::string& tail);

  ElementResolver resolver() const;
  const Binding* find(const std::string& name) const;
  void bind(const std::string& name, Binding value);
  std::string render(const Binding& value) const;

  Element element_arg(const std::string& token) const;
  Certificate cert_arg(const std::string& token) const;
  LocalElement local_arg(const std::string& token) const;
  PrimeHandle handle_arg(const std::string& token) const;
  IndetId indet_arg(const std::string& token) const;

  std::string do_split(const Element& p, const PrimeTag& tag,
                       const std::vector<std::string>& as_names);

  Tower tower_;
  std::vector<std::pair<std::string, Binding>> bindings_;
  bool quit_ = false;
};

// Command-line front end. Flags: --script <file> (batch input), --session
// <file> (state loaded at start when present, saved back on exit), --seed <n>
// (randomized rewrite schedule), --max-terms <n> (expansion guard). Without
// --script, commands are read from stdin. Returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace splitring
