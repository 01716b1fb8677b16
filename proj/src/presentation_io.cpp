#include "hypnorm/presentation_io.hpp"

#include <fstream>
#include <sstream>

#include "hypnorm/errors.hpp"

namespace hypnorm {

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty()
             && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  GroupPresentation parse_presentation(std::string_view text) {
    std::optional<std::string> generators, relators, strategy, delta;
    std::size_t                line_no = 0;
    while (!text.empty()) {
      auto             eol  = text.find('\n');
      std::string_view line = text.substr(0, eol);
      text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
      ++line_no;
      line = trim(line);
      if (line.empty() || line.front() == '#') {
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("line " + std::to_string(line_no)
                         + ": expected 'key: value'");
      }
      auto key   = trim(line.substr(0, colon));
      auto value = std::string(trim(line.substr(colon + 1)));
      std::optional<std::string>* slot = nullptr;
      if (key == "generators") {
        slot = &generators;
      } else if (key == "relators") {
        slot = &relators;
      } else if (key == "strategy") {
        slot = &strategy;
      } else if (key == "delta") {
        slot = &delta;
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown key '"
                         + std::string(key) + "'");
      }
      if (slot->has_value()) {
        throw ParseError("line " + std::to_string(line_no) + ": duplicate key '"
                         + std::string(key) + "'");
      }
      *slot = value;
    }
    if (!generators) {
      throw ParseError("missing 'generators' line");
    }
    if (!strategy) {
      throw ParseError("missing 'strategy' line");
    }
    AlphabetPtr alphabet;
    try {
      alphabet = make_alphabet(*generators);
    } catch (DomainError const& e) {
      throw ParseError(std::string("generators: ") + e.what());
    }
    Strategy s;
    if (*strategy == "free") {
      s = Strategy::Free;
    } else if (*strategy == "dehn") {
      s = Strategy::Dehn;
    } else {
      throw ParseError("unknown strategy '" + *strategy + "'");
    }
    std::vector<Word> words;
    if (relators) {
      std::string_view rest = *relators;
      while (true) {
        auto comma = rest.find(',');
        auto item  = trim(rest.substr(0, comma));
        if (item.empty()) {
          throw ParseError("empty relator in relators list");
        }
        words.push_back(parse_word(item, alphabet));
        if (comma == std::string_view::npos) {
          break;
        }
        rest.remove_prefix(comma + 1);
      }
    }
    std::optional<Rational> d;
    if (delta) {
      d = parse_rational(*delta);
    }
    try {
      return GroupPresentation(alphabet, std::move(words), s, d);
    } catch (DomainError const& e) {
      throw ParseError(e.what());
    }
  }

  std::string format_presentation(GroupPresentation const& p) {
    std::ostringstream out;
    out << "generators: " << p.alphabet()->symbols() << "\n";
    if (!p.relators().empty()) {
      out << "relators: ";
      for (std::size_t i = 0; i < p.relators().size(); ++i) {
        out << (i ? "," : "") << to_string(p.relators()[i]);
      }
      out << "\n";
    }
    out << "strategy: " << (p.strategy() == Strategy::Free ? "free" : "dehn")
        << "\n";
    if (p.delta()) {
      out << "delta: " << format_decimal(*p.delta()) << "\n";
    }
    return out.str();
  }

  std::optional<GroupPresentation> builtin_presentation(std::string_view name) {
    if (name == "F1" || name == "F2" || name == "F3") {
      static constexpr std::string_view letters = "abc";
      auto rank = static_cast<std::size_t>(name[1] - '0');
      return GroupPresentation(make_alphabet(letters.substr(0, rank)), {},
                               Strategy::Free, Rational(0));
    }
    if (name == "surface2") {
      auto alphabet = make_alphabet("abcd");
      return GroupPresentation(alphabet, {parse_word("abABcdCD", alphabet)},
                               Strategy::Dehn);
    }
    return std::nullopt;
  }

  GroupPresentation load_presentation(std::string const& source) {
    if (auto p = builtin_presentation(source)) {
      return *p;
    }
    std::ifstream in(source);
    if (!in) {
      throw ParseError("unknown group '" + source
                       + "' (not a built-in and not a readable file)");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_presentation(buffer.str());
  }

}  // namespace hypnorm
