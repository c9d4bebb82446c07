// Recursive-descent parser for .nihd description files and .nihc catalogs.
//
// Structural errors (E001 unexpected token, E002 unterminated string) abort
// the parse. Semantic findings (E003 duplicate key, E004 unknown keyword,
// E005 missing key, E007 invariant violation) are recorded and parsing
// continues, so one run reports as many of them as possible.

#include <algorithm>
#include <charconv>
#include <initializer_list>

#include "lexer.hpp"
#include "nihdl/dsl.hpp"

namespace nihdl {

namespace {

using detail::Token;
using detail::TokenKind;

constexpr int kMaxNodeDepth = 256;

struct ParseAbort {};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file)
      : tokens_(std::move(tokens)), file_(std::move(file)) {}

  std::vector<Diagnostic> diagnostics;

  Document parse_document() {
    Document doc;
    doc.source_file = file_;
    skip_version_header();
    while (!check(TokenKind::End)) {
      if (!check_word("method")) fail_here("expected 'method'");
      MethodLocations locations;
      doc.methods.push_back(parse_method(locations));
      doc.locations.push_back(std::move(locations));
    }
    return doc;
  }

  PatternCatalog parse_catalog_file() {
    PatternCatalog catalog;
    skip_version_header();
    if (!check_word("catalog")) fail_here("expected 'catalog'");
    consume();
    if (check(TokenKind::String)) catalog.label = consume().text;
    expect(TokenKind::LBrace, "'{'");
    parse_nodes(catalog.roots, 1);
    expect(TokenKind::RBrace, "'}'");
    if (!check(TokenKind::End)) fail_here("expected end of input after catalog");
    return catalog;
  }

 private:
  // --- token plumbing ----------------------------------------------------

  const Token& peek() const { return tokens_[pos_]; }
  bool check(TokenKind kind) const { return peek().kind == kind; }
  bool check_word(std::string_view word) const {
    return peek().kind == TokenKind::Word && peek().text == word;
  }
  const Token& consume() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  SourceLocation loc(const Token& t) const { return SourceLocation{file_, t.line, t.column}; }

  void report(const char* code, const Token& at, std::string message) {
    diagnostics.push_back(make_diagnostic(code, std::move(message), loc(at), method_name_));
  }

  [[noreturn]] void fail_at(const Token& at, std::string message) {
    report("E001", at, std::move(message));
    throw ParseAbort{};
  }

  [[noreturn]] void fail_here(std::string expected) {
    const Token& t = peek();
    if (t.kind == TokenKind::End) fail_at(t, "unexpected end of input, " + expected);
    std::string found = t.kind == TokenKind::Word || t.kind == TokenKind::Ratio ||
                                t.kind == TokenKind::Integer
                            ? "'" + t.text + "'"
                            : std::string(detail::describe(t.kind));
    fail_at(t, "unexpected " + found + ", " + expected);
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (!check(kind)) fail_here("expected " + std::string(what));
    return consume();
  }

  void expect_colon() { expect(TokenKind::Colon, "':'"); }

  std::string expect_string(std::string_view what) {
    return expect(TokenKind::String, what).text;
  }

  void skip_version_header() {
    if (check_word("nihdl-version")) {
      consume();
      expect(TokenKind::Integer, "version number");
    }
  }

  // Keys seen in one block; reports E003 on repeats and E005 on omissions.
  class KeySet {
   public:
    explicit KeySet(Parser& parser) : parser_(parser) {}

    void mark(const Token& key) {
      for (const auto& k : seen_) {
        if (k == key.text) {
          parser_.report("E003", key, "duplicate key '" + key.text + "'");
          return;
        }
      }
      seen_.push_back(key.text);
    }

    bool has(std::string_view key) const {
      for (const auto& k : seen_) {
        if (k == key) return true;
      }
      return false;
    }

    void require(std::initializer_list<std::string_view> keys, const Token& close,
                 std::string_view block) {
      for (auto key : keys) {
        if (!has(key)) {
          parser_.report("E005", close,
                         "missing required key '" + std::string(key) + "' in '" +
                             std::string(block) + "'");
        }
      }
    }

   private:
    Parser& parser_;
    std::vector<std::string> seen_;
  };

  // Parses `{ key ... }`, calling on_key for every key token. Returns the
  // closing brace.
  template <typename OnKey>
  Token block(std::string_view name, OnKey&& on_key) {
    expect(TokenKind::LBrace, "'{' to open '" + std::string(name) + "'");
    while (!check(TokenKind::RBrace)) {
      if (!check(TokenKind::Word)) fail_here("expected a key or '}' in '" + std::string(name) + "'");
      const Token key = consume();
      on_key(key);
    }
    return consume();
  }

  [[noreturn]] void unknown_key(const Token& key, std::string_view block_name) {
    fail_at(key, "unexpected key '" + key.text + "' in '" + std::string(block_name) + "'");
  }

  template <typename Enum>
  std::optional<Enum> enum_value(std::string_view what) {
    const Token& t = peek();
    if (t.kind != TokenKind::Word && t.kind != TokenKind::Ratio &&
        t.kind != TokenKind::Integer) {
      fail_here("expected " + std::string(what));
    }
    const Token token = consume();
    auto value = from_keyword<Enum>(token.text);
    if (!value) {
      report("E004", token, "unknown " + std::string(what) + " '" + token.text + "'");
      skip_parenthesized();
    }
    return value;
  }

  void skip_parenthesized() {
    if (!check(TokenKind::LParen)) return;
    while (!check(TokenKind::RParen) && !check(TokenKind::End)) consume();
    expect(TokenKind::RParen, "')'");
  }

  bool bool_value() {
    const Token& t = peek();
    if (t.kind != TokenKind::Word && t.kind != TokenKind::Integer &&
        t.kind != TokenKind::Ratio) {
      fail_here("expected true or false");
    }
    const Token token = consume();
    if (token.text == "true") return true;
    if (token.text != "false") report("E004", token, "expected true or false, got '" + token.text + "'");
    return false;
  }

  Presence status_value() { return enum_value<Presence>("status").value_or(Presence::Absent); }

  std::vector<std::string> string_list() {
    std::vector<std::string> names;
    expect(TokenKind::LParen, "'('");
    names.push_back(expect_string("string"));
    while (check(TokenKind::Comma)) {
      consume();
      names.push_back(expect_string("string"));
    }
    expect(TokenKind::RParen, "')'");
    return names;
  }

  // --- descriptions ------------------------------------------------------

  MethodDescription parse_method(MethodLocations& locations) {
    MethodDescription m;
    const Token keyword = consume();
    const Token name = expect(TokenKind::String, "method name");
    m.name = name.text;
    method_name_ = m.name;
    locations.method = loc(keyword);
    if (m.name.empty()) report("E007", name, "method name must not be empty");

    KeySet keys(*this);
    const Token close = block("method", [&](const Token& key) {
      keys.mark(key);
      if (key.text == "source") {
        expect_colon();
        m.source = expect_string("source key");
      } else if (key.text == "year") {
        expect_colon();
        m.year = year_value();
      } else if (key.text == "general") {
        parse_general(m, locations);
      } else if (key.text == "process") {
        parse_process(m, locations);
      } else if (key.text == "countermeasures") {
        parse_countermeasures(m, locations, key);
      } else {
        unknown_key(key, "method");
      }
    });
    keys.require({"general", "process", "countermeasures"}, close, "method");
    method_name_.reset();
    return m;
  }

  std::optional<int> year_value() {
    const Token t = expect(TokenKind::Integer, "year");
    int year = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), year);
    if (ec != std::errc() || year < kMinYear || year > kMaxYear) {
      report("E007", t,
             "year must be between " + std::to_string(kMinYear) + " and " +
                 std::to_string(kMaxYear));
      return std::nullopt;
    }
    return year;
  }

  void parse_general(MethodDescription& m, MethodLocations& locations) {
    KeySet keys(*this);
    const Token close = block("general", [&](const Token& key) {
      keys.mark(key);
      if (key.text == "pattern") {
        locations.pattern = loc(key);
        m.pattern = parse_pattern();
      } else if (key.text == "application-scenario") {
        locations.scenario = loc(key);
        m.scenario = parse_scenario();
      } else if (key.text == "carrier-requirements") {
        locations.carrier = loc(key);
        m.carrier = parse_carrier();
      } else {
        unknown_key(key, "general");
      }
    });
    keys.require({"pattern", "carrier-requirements"}, close, "general");
  }

  PatternAssignment parse_pattern() {
    PatternAssignment p;
    std::vector<Token> justify_at;
    KeySet keys(*this);
    const Token close = block("pattern", [&](const Token& key) {
      if (key.text == "path") {
        keys.mark(key);
        expect_colon();
        if (check_word("unassigned")) {
          consume();
          p.path = PatternPath::unassigned();
        } else {
          const Token text = expect(TokenKind::String, "pattern path or 'unassigned'");
          p.path = PatternPath::from_text(text.text);
          for (const auto& element : p.path.elements()) {
            if (!is_valid_pattern_name(element)) {
              report("E007", text, "invalid pattern name '" + element + "' in path");
              break;
            }
          }
        }
      } else if (key.text == "justify") {
        const Token element = expect(TokenKind::String, "path element name");
        expect_colon();
        std::string rationale = expect_string("justification text");
        if (p.justification_for(element.text) != nullptr) {
          report("E003", element, "duplicate justification for '" + element.text + "'");
        }
        justify_at.push_back(element);
        p.justifications.push_back({element.text, std::move(rationale)});
      } else {
        unknown_key(key, "pattern");
      }
    });
    keys.require({"path"}, close, "pattern");

    if (keys.has("path") && !p.path.is_unassigned()) {
      const auto& elements = p.path.elements();
      for (std::size_t i = 0; i < p.justifications.size(); ++i) {
        const auto& j = p.justifications[i];
        if (std::find(elements.begin(), elements.end(), j.element) == elements.end()) {
          report("E007", justify_at[i],
                 "justified element '" + j.element + "' is not on the pattern path");
        }
      }
    }
    return p;
  }

  ApplicationScenario parse_scenario() {
    ApplicationScenario s;
    KeySet keys(*this);
    const Token close = block("application-scenario", [&](const Token& key) {
      keys.mark(key);
      expect_colon();
      if (key.text == "status") {
        s.presence = status_value();
      } else if (key.text == "purpose") {
        s.purpose = purpose_value();
      } else if (key.text == "shared-with") {
        s.shared = SharedGroup{expect_string("group label")};
      } else if (key.text == "text") {
        s.text = expect_string("text");
      } else {
        unknown_key(key, "application-scenario");
      }
    });
    keys.require({"status"}, close, "application-scenario");
    return s;
  }

  std::optional<Purpose> purpose_value() {
    auto kind = enum_value<PurposeKind>("purpose");
    if (!kind) return std::nullopt;
    Purpose purpose{*kind, {}};
    if (*kind == PurposeKind::Other && check(TokenKind::LParen)) {
      consume();
      purpose.other = expect_string("purpose description");
      expect(TokenKind::RParen, "')'");
    }
    return purpose;
  }

  CarrierRequirements parse_carrier() {
    CarrierRequirements c;
    KeySet keys(*this);
    const Token close = block("carrier-requirements", [&](const Token& key) {
      if (key.text != "condition") keys.mark(key);
      expect_colon();
      if (key.text == "status") {
        c.presence = status_value();
      } else if (key.text == "binding") {
        c.binding = binding_value();
      } else if (key.text == "condition") {
        c.conditions.push_back(expect_string("operational condition"));
      } else if (key.text == "shared-with") {
        c.shared = SharedGroup{expect_string("group label")};
      } else if (key.text == "text") {
        c.text = expect_string("text");
      } else {
        unknown_key(key, "carrier-requirements");
      }
    });
    keys.require({"status"}, close, "carrier-requirements");
    return c;
  }

  CarrierBinding binding_value() {
    const Token at = peek();
    auto kind = enum_value<BindingKind>("binding");
    if (!kind) return {};
    CarrierBinding b{*kind, {}};
    switch (*kind) {
      case BindingKind::SingleProtocol:
        expect(TokenKind::LParen, "'('");
        b.names.push_back(expect_string("protocol name"));
        expect(TokenKind::RParen, "')'");
        break;
      case BindingKind::ProtocolSet:
        b.names = string_list();
        if (b.names.size() < 2) report("E007", at, "protocol-set needs at least two protocols");
        break;
      case BindingKind::FeatureBased:
        b.names = string_list();
        break;
      case BindingKind::Generic:
      case BindingKind::Unspecified:
        break;
    }
    return b;
  }

  void parse_process(MethodDescription& m, MethodLocations& locations) {
    KeySet keys(*this);
    const Token close = block("process", [&](const Token& key) {
      keys.mark(key);
      if (key.text == "sender") {
        locations.sender = loc(key);
        m.sender = parse_sender();
      } else if (key.text == "receiver") {
        locations.receiver = loc(key);
        m.receiver = parse_receiver();
      } else if (key.text == "channel") {
        locations.channel = loc(key);
        m.channel = parse_channel(locations);
      } else if (key.text == "control-protocol") {
        m.control_protocol = parse_control(key);
      } else {
        unknown_key(key, "process");
      }
    });
    keys.require({"sender", "receiver", "channel"}, close, "process");
  }

  SenderProcess parse_sender() {
    SenderProcess s;
    KeySet keys(*this);
    const Token close = block("sender", [&](const Token& key) {
      keys.mark(key);
      expect_colon();
      if (key.text == "relation") {
        s.relation = enum_value<Relation>("relation").value_or(Relation::Unspecified);
      } else if (key.text == "location") {
        s.sender_location = enum_value<Location>("location").value_or(Location::Unspecified);
      } else if (key.text == "data-location") {
        s.data_location = enum_value<Location>("location").value_or(Location::Unspecified);
      } else if (key.text == "generates-cover") {
        s.generates_cover =
            enum_value<Tristate>("generates-cover value").value_or(Tristate::Unspecified);
      } else if (key.text == "text") {
        s.text = expect_string("text");
      } else {
        unknown_key(key, "sender");
      }
    });
    keys.require({"relation", "location", "data-location", "generates-cover"}, close, "sender");
    return s;
  }

  ReceiverProcess parse_receiver() {
    ReceiverProcess r;
    KeySet keys(*this);
    const Token close = block("receiver", [&](const Token& key) {
      keys.mark(key);
      expect_colon();
      if (key.text == "location") {
        r.receiver_location = enum_value<Location>("location").value_or(Location::Unspecified);
      } else if (key.text == "text") {
        r.text = expect_string("text");
      } else {
        unknown_key(key, "receiver");
      }
    });
    keys.require({"location"}, close, "receiver");
    return r;
  }

  ChannelProperties parse_channel(MethodLocations& locations) {
    ChannelProperties c;
    KeySet keys(*this);
    const Token close = block("channel", [&](const Token& key) {
      keys.mark(key);
      if (key.text == "scenario") {
        expect_colon();
        c.scenarios = scenario_list();
      } else if (key.text == "directness") {
        expect_colon();
        locations.directness = loc(peek());
        c.directness = directness_value();
      } else if (auto metric = from_keyword<Metric>(key.text)) {
        locations.metrics[static_cast<std::size_t>(*metric)] = loc(key);
        c.metric(*metric) = parse_metric(*metric);
      } else {
        unknown_key(key, "channel");
      }
    });
    keys.require({"scenario", "directness", "bandwidth", "undetectability", "robustness", "cost"},
                 close, "channel");
    return c;
  }

  std::set<CommunicationScenario> scenario_list() {
    std::set<CommunicationScenario> scenarios;
    expect(TokenKind::LBracket, "'['");
    while (true) {
      const Token at = peek();
      if (auto s = enum_value<CommunicationScenario>("scenario")) {
        if (!scenarios.insert(*s).second) {
          report("E003", at, "duplicate scenario '" + at.text + "'");
        }
      }
      if (!check(TokenKind::Comma)) break;
      consume();
    }
    expect(TokenKind::RBracket, "']'");
    return scenarios;
  }

  Directness directness_value() {
    auto kind = enum_value<DirectnessKind>("directness");
    if (!kind) return {};
    Directness d{*kind, {}};
    if (*kind == DirectnessKind::Indirect) {
      expect(TokenKind::LParen, "'(' with intermediary requirements");
      d.intermediary_requirements = expect_string("intermediary requirements");
      expect(TokenKind::RParen, "')'");
    }
    return d;
  }

  ChannelCharacteristic parse_metric(Metric metric) {
    ChannelCharacteristic c;
    const std::string name(keyword(metric));
    KeySet keys(*this);
    const Token close = block(name, [&](const Token& key) {
      keys.mark(key);
      expect_colon();
      if (key.text == "status") {
        c.presence = status_value();
      } else if (key.text == "value") {
        c.value = expect_string("value");
      } else if (key.text == "ref") {
        const Token target = expect(TokenKind::Word, "'countermeasures'");
        if (target.text != "countermeasures") {
          report("E004", target, "unknown reference '" + target.text + "'");
        } else if (metric != Metric::Undetectability) {
          report("E005", key, "'ref: countermeasures' is only allowed in 'undetectability'");
        } else {
          c.refers_to_countermeasures = true;
        }
      } else if (key.text == "shared-with") {
        c.shared = SharedGroup{expect_string("group label")};
      } else if (key.text == "text") {
        c.text = expect_string("text");
      } else {
        unknown_key(key, name);
      }
    });
    keys.require({"status"}, close, name);
    return c;
  }

  ControlProtocol parse_control(const Token& opener) {
    ControlProtocol p;
    KeySet keys(*this);
    const Token close = block("control-protocol", [&](const Token& key) {
      if (key.text != "feature") keys.mark(key);
      expect_colon();
      if (key.text == "status") {
        p.presence = status_value();
      } else if (key.text == "feature") {
        const Token at = peek();
        if (auto f = enum_value<ControlFeature>("feature")) {
          if (!p.features.insert(*f).second) {
            report("E003", at, "duplicate feature '" + at.text + "'");
          }
        }
      } else if (key.text == "text") {
        p.text = expect_string("text");
      } else {
        unknown_key(key, "control-protocol");
      }
    });
    keys.require({"status"}, close, "control-protocol");
    if (keys.has("status") && p.presence == Presence::Absent && !p.features.empty()) {
      report("E007", opener, "an absent control protocol cannot list features");
    }
    return p;
  }

  void parse_countermeasures(MethodDescription& m, MethodLocations& locations,
                             const Token& opener) {
    locations.countermeasures = loc(opener);
    KeySet keys(*this);
    block("countermeasures", [&](const Token& key) {
      if (key.text == "entry") {
        locations.entries.push_back(loc(key));
        m.countermeasures.push_back(parse_entry());
      } else if (key.text == "warden") {
        keys.mark(key);
        locations.warden = loc(key);
        m.warden = parse_warden();
      } else {
        unknown_key(key, "countermeasures");
      }
    });
  }

  CountermeasureEntry parse_entry() {
    CountermeasureEntry e;
    KeySet keys(*this);
    const Token close = block("entry", [&](const Token& key) {
      keys.mark(key);
      expect_colon();
      if (key.text == "type") {
        e.kind = enum_value<CountermeasureKind>("countermeasure type")
                     .value_or(CountermeasureKind::Detection);
      } else if (key.text == "applicability") {
        e.applicability =
            enum_value<Applicability>("applicability").value_or(Applicability::Applicable);
      } else if (key.text == "evaluated") {
        e.evaluated = bool_value();
      } else if (key.text == "limitations") {
        e.limitations = expect_string("limitations");
      } else if (key.text == "text") {
        e.text = expect_string("text");
      } else {
        unknown_key(key, "entry");
      }
    });
    keys.require({"type", "applicability", "evaluated"}, close, "entry");
    return e;
  }

  WardenProfile parse_warden() {
    WardenProfile w;
    KeySet keys(*this);
    const Token close = block("warden", [&](const Token& key) {
      keys.mark(key);
      expect_colon();
      if (key.text == "placement") {
        w.placement = enum_value<Location>("placement").value_or(Location::Unspecified);
      } else if (key.text == "state") {
        w.state = enum_value<WardenState>("warden state").value_or(WardenState::Unspecified);
      } else if (key.text == "activity") {
        w.activity =
            enum_value<WardenActivity>("warden activity").value_or(WardenActivity::Unspecified);
      } else {
        unknown_key(key, "warden");
      }
    });
    keys.require({"placement", "state", "activity"}, close, "warden");
    return w;
  }

  // --- catalogs ----------------------------------------------------------

  void parse_nodes(std::vector<PatternNode>& siblings, int depth) {
    while (check_word("node")) {
      const Token keyword = consume();
      if (depth > kMaxNodeDepth) fail_at(keyword, "catalog nesting too deep");
      const Token name = expect(TokenKind::String, "node name");
      if (!is_valid_pattern_name(name.text)) {
        report("E007", name, "invalid pattern name '" + name.text + "'");
      }
      for (const auto& sibling : siblings) {
        if (sibling.name == name.text) {
          report("E003", name, "duplicate sibling '" + name.text + "'");
          break;
        }
      }
      PatternNode node{name.text, {}};
      expect(TokenKind::LBrace, "'{'");
      parse_nodes(node.children, depth + 1);
      expect(TokenKind::RBrace, "'}'");
      siblings.push_back(std::move(node));
    }
    if (!check(TokenKind::RBrace)) fail_here("expected 'node' or '}'");
  }

  std::vector<Token> tokens_;
  std::string file_;
  std::size_t pos_ = 0;
  std::optional<std::string> method_name_;
};

template <typename T, typename Run>
ParseResult<T> run_parser(std::string_view text, std::string file_name, Run&& run) {
  ParseResult<T> result;
  auto lexed = detail::tokenize(text, file_name);
  if (lexed.error) {
    result.diagnostics.push_back(std::move(*lexed.error));
    return result;
  }
  Parser parser(std::move(lexed.tokens), std::move(file_name));
  try {
    T value = run(parser);
    if (!has_errors(parser.diagnostics)) result.value = std::move(value);
  } catch (const ParseAbort&) {
  }
  result.diagnostics = std::move(parser.diagnostics);
  return result;
}

}  // namespace

ParseResult<Document> parse_description(std::string_view text, std::string file_name) {
  return run_parser<Document>(text, std::move(file_name),
                              [](Parser& p) { return p.parse_document(); });
}

ParseResult<PatternCatalog> parse_catalog(std::string_view text, std::string file_name) {
  return run_parser<PatternCatalog>(text, std::move(file_name),
                                    [](Parser& p) { return p.parse_catalog_file(); });
}

}  // namespace nihdl
