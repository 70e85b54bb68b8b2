#include <ordalex/presentation.hpp>

#include <ordalex/errors.hpp>

#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace ordalex
{

namespace
{

// Hard cap on letters produced by expanding powers of compound words.
constexpr std::int64_t max_expanded_length = 1'000'000;

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GroupPresentation presentation()
    {
        expect('<');
        std::set<std::string> seen;
        for (;;) {
            skip();
            const int l = line_, c = col_;
            std::string name = ident();
            if (!seen.insert(name).second) throw parse_error("duplicate generator '" + name + "'", l, c);
            names_.push_back(std::move(name));
            if (!accept(',')) break;
        }
        expect('|');
        std::vector<FreeWord> rels;
        if (!peek_is('>')) {
            for (;;) {
                rels.push_back(item());
                if (!accept(',')) break;
            }
        }
        expect('>');
        skip();
        if (pos_ < text_.size()) fail("trailing input after '>'");
        return GroupPresentation(names_, std::move(rels));
    }

    FreeWord single_word(const std::vector<std::string> &names)
    {
        names_ = names;
        FreeWord w = word();
        skip();
        if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return w;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    std::vector<std::string> names_;

    [[noreturn]] void fail(const std::string &msg) const { throw parse_error(msg, line_, col_); }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip()
    {
        while (pos_ < text_.size()) {
            const char ch = text_[pos_];
            if (ch == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool peek_is(char ch)
    {
        skip();
        return pos_ < text_.size() && text_[pos_] == ch;
    }

    bool accept(char ch)
    {
        if (!peek_is(ch)) return false;
        advance();
        return true;
    }

    void expect(char ch)
    {
        if (!accept(ch)) {
            if (pos_ >= text_.size()) fail(std::string("expected '") + ch + "' but reached end of input");
            fail(std::string("expected '") + ch + "' but found '" + text_[pos_] + "'");
        }
    }

    static bool ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) != 0 && (ch & 0x80) == 0; }
    static bool ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) != 0 && (ch & 0x80) == 0; }

    std::string ident()
    {
        skip();
        if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected a generator name");
        std::string out;
        while (pos_ < text_.size() && ident_char(text_[pos_])) {
            out.push_back(text_[pos_]);
            advance();
        }
        return out;
    }

    std::int64_t integer()
    {
        skip();
        const int l = line_, c = col_;
        std::string digits;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            if (text_[pos_] == '-') digits.push_back('-');
            advance();
        }
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits.push_back(text_[pos_]);
            advance();
        }
        if (digits.empty() || digits == "-") throw parse_error("expected an integer exponent", l, c);
        BigInt v(digits, 10);
        if (v > std::numeric_limits<std::int64_t>::max() || v < -std::numeric_limits<std::int64_t>::max()) {
            throw parse_error("exponent " + digits + " is out of range", l, c);
        }
        return v.get_si();
    }

    std::int64_t optional_power()
    {
        if (!accept('^')) return 1;
        return integer();
    }

    FreeWord raise(const FreeWord &w, std::int64_t n)
    {
        if (w.letters().size() > 1) {
            const std::int64_t len = w.length();
            const std::int64_t an = n < 0 ? -n : n;
            if (an != 0 && len > max_expanded_length / an) fail("power expands beyond the supported word length");
        }
        return power(w, n);
    }

    FreeWord factor()
    {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input in word");
        const char ch = text_[pos_];
        if (ch == '[') {
            advance();
            FreeWord a = word();
            expect(',');
            FreeWord b = word();
            expect(']');
            return raise(commutator(a, b), optional_power());
        }
        if (ch == '(') {
            advance();
            FreeWord a = word();
            expect(')');
            return raise(a, optional_power());
        }
        const int l = line_, c = col_;
        std::string name = ident();
        std::size_t idx = names_.size();
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i] == name) idx = i;
        }
        if (idx == names_.size()) throw parse_error("unknown generator '" + name + "'", l, c);
        return FreeWord::generator(idx, optional_power());
    }

    bool starts_factor()
    {
        skip();
        if (pos_ >= text_.size()) return false;
        const char ch = text_[pos_];
        return ch == '[' || ch == '(' || ident_start(ch);
    }

    FreeWord word()
    {
        if (!starts_factor()) {
            if (pos_ >= text_.size()) fail("expected a word but reached end of input");
            fail(std::string("expected a word but found '") + text_[pos_] + "'");
        }
        FreeWord w = factor();
        while (starts_factor()) w = w * factor();
        return w;
    }

    FreeWord item()
    {
        FreeWord lhs = word();
        if (accept('=')) return lhs * word().inverse();
        return lhs;
    }
};

} // namespace

GroupPresentation parse_presentation(std::string_view text)
{
    return Parser(text).presentation();
}

FreeWord parse_word(std::string_view text, const std::vector<std::string> &generators)
{
    return Parser(text).single_word(generators);
}

std::string render_word(const FreeWord &w, const std::vector<std::string> &names)
{
    if (w.empty()) return names.empty() ? std::string("1") : names[0] + "^0";
    std::ostringstream os;
    bool first = true;
    for (const auto &l : w.letters()) {
        if (!first) os << ' ';
        first = false;
        os << names.at(l.generator);
        if (l.exponent != 1) os << '^' << l.exponent;
    }
    return os.str();
}

std::string render(const GroupPresentation &p)
{
    std::ostringstream os;
    os << "< ";
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
        if (i) os << ", ";
        os << p.generators()[i];
    }
    os << " |";
    for (std::size_t i = 0; i < p.relator_count(); ++i) {
        os << (i ? ", " : " ") << render_word(p.relators()[i], p.generators());
    }
    os << " >";
    return os.str();
}

} // namespace ordalex
