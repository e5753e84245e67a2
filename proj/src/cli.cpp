#include "splitring/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "splitring/divide.hpp"
#include "splitring/errors.hpp"
#include "splitring/indet.hpp"
#include "splitring/laurent.hpp"
#include "splitring/monomial.hpp"
#include "splitring/rational.hpp"

namespace splitring {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return text.substr(begin, end - begin);
}

// Splits a command tail into arguments at whitespace that is not enclosed in
// (), [], or {}, so handle literals and grouped expressions keep their inner
// spaces.
std::vector<std::string> split_args(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth == 0 && is_space(c)) {
      if (!current.empty()) {
        out.push_back(current);
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (depth != 0) fail(errc::parse_error, "unbalanced brackets in command");
  if (!current.empty()) out.push_back(current);
  return out;
}

// Arguments, optionally followed by `with <...>` and/or `as <...>` clauses
// (in that order).
struct Clauses {
  std::vector<std::string> main;
  std::vector<std::string> with;
  std::vector<std::string> as;
};

Clauses split_clauses(const std::vector<std::string>& args) {
  Clauses out;
  std::vector<std::string>* target = &out.main;
  for (const std::string& arg : args) {
    if (arg == "with") {
      if (target != &out.main)
        fail(errc::parse_error, "misplaced with-clause");
      target = &out.with;
    } else if (arg == "as") {
      if (target == &out.as) fail(errc::parse_error, "duplicate as-clause");
      target = &out.as;
    } else {
      target->push_back(arg);
    }
  }
  return out;
}

void expect_counts(const Clauses& c, std::size_t main_min,
                   std::size_t main_max, std::size_t as_count,
                   const std::string& usage) {
  if (c.main.size() < main_min || c.main.size() > main_max ||
      !c.with.empty() || (!c.as.empty() && c.as.size() != as_count))
    fail(errc::parse_error, "usage: " + usage);
}

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  if (name == "as" || name == "with" || name == "unit") return false;
  // t<digits> spellings belong to the stage variables
  if (name[0] == 't' && name.size() > 1 &&
      std::all_of(name.begin() + 1, name.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      }))
    return false;
  return true;
}

int parse_stage(const std::string& token) {
  if (token.empty() || token.size() > 6 ||
      !std::all_of(token.begin(), token.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      }))
    fail(errc::parse_error, "expected a stage number, got '" + token + "'");
  return std::stoi(token);
}

std::string next_word(const std::string& line, std::size_t& pos) {
  while (pos < line.size() && line[pos] == ' ') ++pos;
  std::size_t start = pos;
  while (pos < line.size() && line[pos] != ' ') ++pos;
  return line.substr(start, pos - start);
}

}  // namespace

ElementResolver Session::resolver() const {
  return [this](std::string_view name) -> std::optional<Element> {
    const Binding* binding = find(std::string(name));
    if (!binding) return std::nullopt;
    if (const Element* e = std::get_if<Element>(binding)) return *e;
    if (const Certificate* c = std::get_if<Certificate>(binding))
      return c->value();
    return std::nullopt;  // fractions do not embed in ring expressions
  };
}

const Session::Binding* Session::find(const std::string& name) const {
  for (const auto& [bound_name, value] : bindings_)
    if (bound_name == name) return &value;
  return nullptr;
}

void Session::bind(const std::string& name, Binding value) {
  if (!valid_name(name))
    fail(errc::parse_error, "invalid binding name '" + name + "'");
  for (auto& [bound_name, bound_value] : bindings_) {
    if (bound_name == name) {
      bound_value = std::move(value);
      return;
    }
  }
  bindings_.emplace_back(name, std::move(value));
}

std::string Session::render(const Binding& value) const {
  if (const Element* e = std::get_if<Element>(&value))
    return canonical_encode(*e);
  if (const Certificate* c = std::get_if<Certificate>(&value))
    return c->text();
  return std::get<LocalElement>(value).text();
}

Element Session::element_arg(const std::string& token) const {
  if (const Binding* binding = find(token)) {
    if (const Element* e = std::get_if<Element>(binding)) return *e;
    if (const Certificate* c = std::get_if<Certificate>(binding))
      return c->value();
    fail(errc::invalid_argument,
         "'" + token + "' is a fraction, not a ring element");
  }
  return parse_element(token, tower_, resolver());
}

Certificate Session::cert_arg(const std::string& token) const {
  if (const Binding* binding = find(token)) {
    if (const Certificate* c = std::get_if<Certificate>(binding)) return *c;
    fail(errc::certificate_required,
         "'" + token + "' is not bound to a certificate");
  }
  return parse_certificate(token, tower_);
}

LocalElement Session::local_arg(const std::string& token) const {
  if (const Binding* binding = find(token)) {
    if (const LocalElement* l = std::get_if<LocalElement>(binding)) return *l;
    if (const Certificate* c = std::get_if<Certificate>(binding))
      return LocalElement::from_certificate(*c);
    return LocalElement::from_element(std::get<Element>(*binding));
  }
  // Inline text: prefer the certified reading, fall back to an expression.
  try {
    return LocalElement::from_certificate(parse_certificate(token, tower_));
  } catch (const ring_error&) {
    return LocalElement::from_element(
        parse_element(token, tower_, resolver()));
  }
}

PrimeHandle Session::handle_arg(const std::string& token) const {
  if (const Binding* binding = find(token)) {
    if (const Certificate* c = std::get_if<Certificate>(binding)) {
      if (c->unit_part() == 1 && c->factors().size() == 1 &&
          c->factors().begin()->second == 1)
        return c->factors().begin()->first;
    }
    fail(errc::invalid_argument,
         "'" + token + "' does not name a single prime handle");
  }
  return parse_handle(token, tower_);
}

IndetId Session::indet_arg(const std::string& token) const {
  Element e = element_arg(token);
  if (!e.is_zero() && e.term_count() == 1 && e.leading_coefficient() == 1) {
    const Monomial& m = e.leading_monomial();
    if (m.factors().size() == 1 && m.factors()[0].second == 1)
      return m.factors()[0].first;
  }
  fail(errc::invalid_argument,
       "expected a single indeterminate, got '" + token + "'");
}

std::string Session::do_split(const Element& p, const PrimeTag& tag,
                              const std::vector<std::string>& as_names) {
  Tower::SplitResult result = tower_.split(p, tag);
  std::ostringstream out;
  out << "stable pair: " << result.gen.text() << " and " << result.conj.text()
      << "\n";
  out << "lambda = " << rational_to_text(result.lambda)
      << ", monic representative = " << canonical_encode(p.monic()) << "\n";
  if (!result.fresh) out << "(already registered)\n";
  if (as_names.size() == 2) {
    bind(as_names[0], Certificate::prime(result.gen));
    bind(as_names[1], Certificate::prime(result.conj));
  }
  return out.str();
}

std::string Session::execute(const std::string& line) {
  std::string body = trim(line);
  if (body.empty() || body[0] == '#') return "";
  std::size_t pos = 0;
  while (pos < body.size() && !is_space(body[pos])) ++pos;
  std::string verb = body.substr(0, pos);
  std::string tail = trim(body.substr(pos));

  Tower tower_backup = tower_;
  auto bindings_backup = bindings_;
  try {
    return dispatch(verb, tail);
  } catch (const ring_error& error) {
    tower_ = std::move(tower_backup);
    bindings_ = std::move(bindings_backup);
    return std::string("error: ") + error.what() + "\n";
  } catch (const std::exception& error) {
    tower_ = std::move(tower_backup);
    bindings_ = std::move(bindings_backup);
    return std::string("error: invalid_argument: ") + error.what() + "\n";
  }
}

std::string Session::dispatch(const std::string& verb,
                              const std::string& tail) {
  std::ostringstream out;

  if (verb == "quit") {
    if (!tail.empty()) fail(errc::parse_error, "usage: quit");
    quit_ = true;
    return "";
  }

  if (verb == "let" || verb == "cert") {
    std::size_t eq = tail.find('=');
    if (eq == std::string::npos)
      fail(errc::parse_error, "usage: " + verb + " <name> = <expression>");
    std::string name = trim(tail.substr(0, eq));
    std::string expr = trim(tail.substr(eq + 1));
    if (verb == "let") {
      Element value = parse_element(expr, tower_, resolver());
      bind(name, value);
      out << name << " = " << canonical_encode(value) << "\n";
    } else {
      Certificate value = parse_certificate(expr, tower_);
      bind(name, value);
      out << name << " = " << value.text() << "\n";
    }
    return out.str();
  }

  if (verb == "member") {
    if (tail.empty()) fail(errc::parse_error, "usage: member <laurent-expr>");
    LaurentElement x = parse_laurent(tail, tower_, resolver());
    std::optional<Element> preimage = from_laurent(x);
    if (preimage)
      out << "member: " << canonical_encode(*preimage) << "\n";
    else
      out << "not a member of the ring\n";
    return out.str();
  }

  Clauses c = split_clauses(split_args(tail));

  if (verb == "show") {
    if (!c.with.empty() || !c.as.empty())
      fail(errc::parse_error, "usage: show [<name>...]");
    if (c.main.empty()) {
      save(out);
      return out.str();
    }
    for (const std::string& name : c.main) {
      const Binding* binding = find(name);
      if (!binding)
        fail(errc::invalid_argument, "no binding named '" + name + "'");
      out << name << " = " << render(*binding) << "\n";
    }
    return out.str();
  }

  if (verb == "split") {
    if (c.main.size() != 1 || (!c.with.empty() && c.with.size() != 2) ||
        (!c.as.empty() && c.as.size() != 2))
      fail(errc::parse_error,
           "usage: split <element> [with <acert|-> <bcert|->] [as <n1> <n2>]");
    Element p = element_arg(c.main[0]);
    std::optional<PrimeTag> tag;
    if (!p.is_zero() && p.term_count() == 1) {
      const Monomial& m = p.leading_monomial();
      if (m.factors().size() == 1 && m.factors()[0].second == 1)
        tag = PrimeTag::stage_variable();
    }
    if (!tag) {
      // Infer the linear shape a - x*b from the unique top variable.
      std::optional<IndetId> top;
      bool ambiguous = false;
      for (const auto& [coeff, mono] : p.terms()) {
        (void)coeff;
        for (const auto& [id, exp] : mono.factors()) {
          (void)exp;
          if (id.is_split_kind()) continue;
          if (!top || id.stage() > top->stage()) {
            top = id;
            ambiguous = false;
          } else if (id.stage() == top->stage() && !(id == *top)) {
            ambiguous = true;
          }
        }
      }
      if (!top || ambiguous)
        fail(errc::not_certified_prime,
             "cannot infer a linear prime shape: no unique top variable");
      CoefficientSplit parts = coefficients_in(p, *top);
      if (parts.min_power != 0 || parts.coefficients.size() != 2)
        fail(errc::not_certified_prime,
             "target is not linear in " + top->text());
      Element a = parts.coefficients[0];
      Element b = -parts.coefficients[1];
      std::optional<Certificate> a_cert;
      std::optional<Certificate> b_cert;
      if (c.with.size() == 2) {
        if (c.with[0] != "-") a_cert = cert_arg(c.with[0]);
        if (c.with[1] != "-") b_cert = cert_arg(c.with[1]);
      }
      tag = PrimeTag::linear_fresh(a, *top, b,
                                   a_cert ? &*a_cert : nullptr,
                                   b_cert ? &*b_cert : nullptr);
    }
    return do_split(p, *tag, c.as);
  }

  if (verb == "fresht") {
    expect_counts(c, 1, 1, 2, "fresht <stage> [as <n1> <n2>]");
    int stage = parse_stage(c.main[0]);
    return do_split(Tower::stage_element(stage), PrimeTag::stage_variable(),
                    c.as);
  }

  if (verb == "freshu") {
    expect_counts(c, 3, 4, 1,
                  "freshu <stage> <a> <bcert> [<acert>] [as <name>]");
    int stage = parse_stage(c.main[0]);
    Element a = element_arg(c.main[1]);
    Certificate b = cert_arg(c.main[2]);
    std::optional<Certificate> a_cert;
    if (c.main.size() == 4) a_cert = cert_arg(c.main[3]);
    Tower::UnitSeedResult result =
        tower_.fresh_u(stage, a, b, a_cert ? &*a_cert : nullptr);
    out << "seed: " << result.seed.text() << "\n";
    out << "unit prime: " << result.prime.text() << " = "
        << canonical_encode(result.prime.value()) << "\n";
    if (!result.fresh) out << "(already registered)\n";
    if (c.as.size() == 1) bind(c.as[0], Certificate::prime(result.prime));
    return out.str();
  }

  if (verb == "mul" || verb == "add") {
    expect_counts(c, 2, 16, 1, verb + " <x> <y> [...] [as <name>]");
    bool all_certs =
        verb == "mul" &&
        std::all_of(c.main.begin(), c.main.end(), [&](const std::string& n) {
          const Binding* b = find(n);
          return b && std::holds_alternative<Certificate>(*b);
        });
    if (all_certs) {
      Certificate product;
      for (const std::string& name : c.main) product = product * cert_arg(name);
      if (c.as.size() == 1) bind(c.as[0], product);
      out << product.text() << "\n";
      return out.str();
    }
    Element result = element_arg(c.main[0]);
    for (std::size_t i = 1; i < c.main.size(); ++i) {
      Element next = element_arg(c.main[i]);
      result = verb == "mul" ? result * next : result + next;
    }
    if (c.as.size() == 1) bind(c.as[0], result);
    out << canonical_encode(result) << "\n";
    return out.str();
  }

  if (verb == "divides") {
    expect_counts(c, 2, 2, 0, "divides <d> <x>");
    Element d = element_arg(c.main[0]);
    Element x = element_arg(c.main[1]);
    std::optional<Element> quotient = try_divide(x, d);
    if (quotient)
      out << "yes: quotient = " << canonical_encode(*quotient) << "\n";
    else
      out << "no\n";
    return out.str();
  }

  if (verb == "val") {
    expect_counts(c, 2, 2, 0, "val <x> <p>");
    out << valuation(element_arg(c.main[0]), element_arg(c.main[1])) << "\n";
    return out.str();
  }

  if (verb == "spread") {
    expect_counts(c, 2, 2, 0, "spread <x> <handle>");
    Element x = element_arg(c.main[0]);
    PrimeHandle h = handle_arg(c.main[1]);
    std::optional<SplitKey> key = split_key_of(h.id());
    if (!key)
      fail(errc::invalid_argument, "spread needs a split generator handle");
    out << x.spread(*key) << "\n";
    return out.str();
  }

  if (verb == "rank") {
    expect_counts(c, 1, 1, 0, "rank <x>");
    out << element_arg(c.main[0]).rank() << "\n";
    return out.str();
  }

  if (verb == "coeffs") {
    expect_counts(c, 2, 2, 0, "coeffs <x> <var>");
    Element x = element_arg(c.main[0]);
    IndetId var = indet_arg(c.main[1]);
    CoefficientSplit parts = coefficients_in(x, var);
    for (std::size_t i = 0; i < parts.coefficients.size(); ++i)
      out << parts.var.text() << "^"
          << parts.min_power + static_cast<int>(i) << ": "
          << canonical_encode(parts.coefficients[i]) << "\n";
    return out.str();
  }

  if (verb == "laurent") {
    expect_counts(c, 1, 1, 0, "laurent <x>");
    out << laurent_encode(to_laurent(element_arg(c.main[0]))) << "\n";
    return out.str();
  }

  if (verb == "phi") {
    expect_counts(c, 1, 1, 0, "phi <certificate|local>");
    if (const Binding* binding = find(c.main[0])) {
      if (const LocalElement* l = std::get_if<LocalElement>(binding)) {
        out << phi(*l) << "\n";
        return out.str();
      }
    }
    out << phi(cert_arg(c.main[0])) << "\n";
    return out.str();
  }

  if (verb == "gcd" || verb == "cofactor") {
    expect_counts(c, 2, 2, 1, verb + " <cert1> <cert2> [as <name>]");
    Certificate x = cert_arg(c.main[0]);
    Certificate y = cert_arg(c.main[1]);
    Certificate result = verb == "gcd" ? cert_gcd(x, y) : cert_cofactor(x, y);
    if (c.as.size() == 1) bind(c.as[0], result);
    out << result.text() << "\n";
    return out.str();
  }

  if (verb == "divstep") {
    expect_counts(c, 2, 2, 2, "divstep <a> <b> [as <q> <r>]");
    LocalElement a = local_arg(c.main[0]);
    LocalElement b = local_arg(c.main[1]);
    DivisionStep step = div_step(tower_, a, b);
    DivisionTrace trace;
    trace.steps.push_back(step);
    out << trace.table();
    if (c.as.size() == 2) {
      bind(c.as[0], step.quotient);
      bind(c.as[1], step.remainder);
    }
    return out.str();
  }

  if (verb == "euclid") {
    expect_counts(c, 2, 2, 0, "euclid <a> <b>");
    LocalElement a = local_arg(c.main[0]);
    LocalElement b = local_arg(c.main[1]);
    DivisionTrace trace = euclid_run(tower_, a, b);
    out << trace.table();
    return out.str();
  }

  if (verb == "witness") {
    expect_counts(c, 3, 3, 0, "witness <stable-handle> <v-cert> <q>");
    PrimeHandle p = handle_arg(c.main[0]);
    Certificate v = cert_arg(c.main[1]);
    LocalElement q = local_arg(c.main[2]);
    DivisorWitness witness = stable_divisor_witness(tower_, p, v, q);
    out << "r = " << canonical_encode(witness.value) << "\n";
    out << "p1 = " << witness.first.text() << "\n";
    out << "p2 = " << witness.second.text() << "\n";
    out << "cofactor = " << witness.cofactor.text() << "\n";
    return out.str();
  }

  if (verb == "refute") {
    if (c.main.size() < 3 || c.main.size() % 2 == 0 || !c.with.empty() ||
        !c.as.empty())
      fail(errc::parse_error,
           "usage: refute <stable-handle> <q1> <v1> [<q2> <v2> ...]");
    PrimeHandle p = handle_arg(c.main[0]);
    std::vector<std::pair<LocalElement, Certificate>> candidates;
    for (std::size_t i = 1; i + 1 < c.main.size(); i += 2)
      candidates.emplace_back(local_arg(c.main[i]), cert_arg(c.main[i + 1]));
    out << norm_refutation_report(tower_, p, candidates);
    return out.str();
  }

  if (verb == "save" || verb == "load") {
    expect_counts(c, 1, 1, 0, verb + " <file>");
    const std::string& path = c.main[0];
    if (verb == "save") {
      std::ofstream file(path);
      if (!file)
        fail(errc::invalid_argument, "cannot open '" + path + "' for writing");
      save(file);
      out << "saved " << path << "\n";
    } else {
      std::ifstream file(path);
      if (!file) fail(errc::invalid_argument, "cannot open '" + path + "'");
      load(file);
      out << "loaded " << path << " (" << tower_.event_count()
          << " tower events, " << bindings_.size() << " bindings)\n";
    }
    return out.str();
  }

  fail(errc::parse_error, "unknown command '" + verb + "'");
}

void Session::save(std::ostream& out) const {
  tower_.save(out);
  for (const auto& [name, value] : bindings_) {
    out << "LET " << name << ' ';
    if (const Element* e = std::get_if<Element>(&value)) {
      out << "ELEM " << canonical_encode(*e);
    } else if (const Certificate* c = std::get_if<Certificate>(&value)) {
      out << "CERT " << c->text();
    } else {
      const LocalElement& l = std::get<LocalElement>(value);
      if (l.is_zero()) {
        out << "LOCAL ZERO";
      } else if (l.numerator()) {
        out << "LOCAL NUM CERT " << l.numerator()->text() << " DEN "
            << l.denominator().text();
      } else {
        out << "LOCAL NUM ELEM " << canonical_encode(l.numerator_value())
            << " DEN " << l.denominator().text();
      }
    }
    out << '\n';
  }
}

void Session::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "splitring tower v1")
    fail(errc::parse_error, "missing session header");
  std::ostringstream tower_text;
  tower_text << "splitring tower v1\n";
  std::vector<std::string> let_lines;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("LET ", 0) == 0)
      let_lines.push_back(line);
    else
      tower_text << line << '\n';
  }
  std::istringstream tower_in(tower_text.str());
  Tower tower = Tower::load(tower_in);

  std::vector<std::pair<std::string, Binding>> bindings;
  auto rebind = [&bindings](const std::string& name, Binding value) {
    if (!valid_name(name))
      fail(errc::parse_error, "invalid binding name '" + name + "'");
    for (auto& [bound_name, bound_value] : bindings) {
      if (bound_name == name) {
        bound_value = std::move(value);
        return;
      }
    }
    bindings.emplace_back(name, std::move(value));
  };

  for (const std::string& let : let_lines) {
    std::size_t pos = 4;  // past "LET "
    std::string name = next_word(let, pos);
    std::string kind = next_word(let, pos);
    std::string rest = pos < let.size() ? trim(let.substr(pos)) : "";
    if (kind == "ELEM") {
      rebind(name, parse_element(rest, tower));
    } else if (kind == "CERT") {
      rebind(name, parse_certificate(rest, tower));
    } else if (kind == "LOCAL") {
      std::size_t local_pos = 0;
      std::string shape = next_word(rest, local_pos);
      if (shape == "ZERO") {
        rebind(name, LocalElement::zero());
      } else if (shape == "NUM") {
        std::string num_kind = next_word(rest, local_pos);
        std::string body =
            local_pos < rest.size() ? trim(rest.substr(local_pos)) : "";
        std::size_t den_pos = body.find(" DEN ");
        if (den_pos == std::string::npos)
          fail(errc::parse_error, "missing DEN in LOCAL binding");
        std::string num_text = body.substr(0, den_pos);
        std::string den_text = body.substr(den_pos + 5);
        Certificate den = parse_certificate(den_text, tower);
        if (num_kind == "CERT")
          rebind(name, LocalElement::from_certificate(
                           parse_certificate(num_text, tower), den));
        else if (num_kind == "ELEM")
          rebind(name, LocalElement::from_element(
                           parse_element(num_text, tower), den));
        else
          fail(errc::parse_error, "unknown LOCAL numerator kind " + num_kind);
      } else {
        fail(errc::parse_error, "unknown LOCAL shape " + shape);
      }
    } else {
      fail(errc::parse_error, "unknown binding kind " + kind);
    }
  }

  tower_ = std::move(tower);
  bindings_ = std::move(bindings);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"exact arithmetic in a tower of freely split polynomial rings"};
  std::string script_path;
  std::string session_path;
  std::uint64_t seed = 0;
  int max_terms = 10000;
  app.add_option("--script", script_path,
                 "read commands from a file instead of stdin");
  app.add_option("--session", session_path,
                 "state file: loaded at start when present, saved on exit");
  CLI::Option* seed_option =
      app.add_option("--seed", seed,
                     "randomized conjugate-elimination schedule seed");
  app.add_option("--max-terms", max_terms,
                 "maximum term count for intermediate expansions")
      ->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  ScheduleGuard guard;
  set_max_terms_limit(max_terms);
  if (seed_option->count() > 0) RewriteSchedule::use_randomized(seed);

  Session session;
  if (!session_path.empty()) {
    std::ifstream in(session_path);
    if (in) {
      try {
        session.load(in);
      } catch (const ring_error& error) {
        std::cerr << "error loading session: " << error.what() << '\n';
        return 1;
      }
    }
  }

  std::istream* input = &std::cin;
  std::ifstream script;
  if (!script_path.empty()) {
    script.open(script_path);
    if (!script) {
      std::cerr << "error: cannot open script file " << script_path << '\n';
      return 1;
    }
    input = &script;
  }

  std::string line;
  while (!session.quit_requested() && std::getline(*input, line))
    std::cout << session.execute(line);

  if (!session_path.empty()) {
    std::ofstream out(session_path);
    if (!out) {
      std::cerr << "error: cannot write session file " << session_path << '\n';
      return 1;
    }
    session.save(out);
  }
  return 0;
}

}  // namespace splitring
