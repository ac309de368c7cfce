#include "leibniz/io.hpp"

#include "leibniz/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace leibniz {

using ordered_json = nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ordered_json parse_document(std::string_view text)
{
    try {
        return ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what(),
                         line, col);
    }
}

[[noreturn]] void fail(const std::string& path, const std::string& msg)
{
    throw ParseError(path + ": " + msg);
}

std::size_t index_field(const ordered_json& obj, const char* key, std::size_t dim, const std::string& path)
{
    if (!obj.contains(key))
        fail(path, std::string("missing \"") + key + "\"");
    const auto& v = obj.at(key);
    if (!v.is_number_integer())
        fail(path + "." + key, "expected an integer");
    const auto i = v.get<long long>();
    if (i < 1 || static_cast<std::size_t>(i) > dim)
        fail(path + "." + key, "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
    return static_cast<std::size_t>(i - 1);
}

Scalar coeff_field(const ordered_json& obj, const std::string& path)
{
    if (!obj.contains("coeff"))
        fail(path, "missing \"coeff\"");
    const auto& v = obj.at("coeff");
    if (v.is_number_integer())
        return Scalar(std::to_string(v.get<long long>()));
    if (!v.is_string())
        fail(path + ".coeff", "expected a rational string \"p/q\"");
    try {
        return parse_scalar(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(path + ".coeff", e.what());
    }
}

void require_keys(const ordered_json& obj, std::initializer_list<const char*> allowed, const std::string& path)
{
    if (!obj.is_object())
        fail(path, "expected an object");
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            ok = ok || key == a;
        if (!ok)
            fail(path, "unknown key \"" + key + "\"");
    }
}

} // namespace

LeibnizAlgebra parse_algebra_json(std::string_view text)
{
    const ordered_json doc = parse_document(text);
    require_keys(doc, {"dim", "labels", "brackets"}, "$");
    if (!doc.contains("dim") || !doc.at("dim").is_number_integer())
        fail("$.dim", "expected a positive integer");
    const auto dim_raw = doc.at("dim").get<long long>();
    if (dim_raw < 1)
        fail("$.dim", "expected a positive integer");
    const auto dim = static_cast<std::size_t>(dim_raw);

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        const auto& l = doc.at("labels");
        if (!l.is_array() || l.size() != dim)
            fail("$.labels", "expected an array of " + std::to_string(dim) + " strings");
        for (const auto& s : l) {
            if (!s.is_string())
                fail("$.labels", "expected strings");
            labels.push_back(s.get<std::string>());
        }
    }

    std::vector<LeibnizAlgebra::BasisBracket> brackets;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    if (doc.contains("brackets")) {
        const auto& arr = doc.at("brackets");
        if (!arr.is_array())
            fail("$.brackets", "expected an array");
        for (std::size_t b = 0; b < arr.size(); ++b) {
            const std::string path = "$.brackets[" + std::to_string(b) + "]";
            const auto& entry = arr[b];
            require_keys(entry, {"left", "right", "value"}, path);
            const std::size_t i = index_field(entry, "left", dim, path);
            const std::size_t j = index_field(entry, "right", dim, path);
            if (!seen.emplace(i, j).second)
                fail(path, "duplicate bracket [e_" + std::to_string(i + 1) + ",e_" + std::to_string(j + 1) + "]");
            if (!entry.contains("value") || !entry.at("value").is_array())
                fail(path + ".value", "expected an array");
            Vector value = zero_vector(dim);
            std::set<std::size_t> bases;
            const auto& terms = entry.at("value");
            for (std::size_t t = 0; t < terms.size(); ++t) {
                const std::string tpath = path + ".value[" + std::to_string(t) + "]";
                require_keys(terms[t], {"basis", "coeff"}, tpath);
                const std::size_t k = index_field(terms[t], "basis", dim, tpath);
                if (!bases.insert(k).second)
                    fail(tpath, "duplicate basis index " + std::to_string(k + 1));
                value[k] = coeff_field(terms[t], tpath);
            }
            brackets.push_back({i, j, std::move(value)});
        }
    }
    return LeibnizAlgebra(dim, brackets, std::move(labels));
}

std::string algebra_to_json(const LeibnizAlgebra& alg)
{
    const std::size_t n = alg.dim();
    ordered_json doc;
    doc["dim"] = n;
    if (!alg.labels().empty())
        doc["labels"] = alg.labels();
    ordered_json brackets = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector& v = alg.basis_bracket(i, j);
            if (is_zero(v))
                continue;
            ordered_json value = ordered_json::array();
            for (std::size_t k = 0; k < n; ++k)
                if (v[k] != 0)
                    value.push_back({{"basis", k + 1}, {"coeff", to_string(v[k])}});
            brackets.push_back({{"left", i + 1}, {"right", j + 1}, {"value", std::move(value)}});
        }
    doc["brackets"] = std::move(brackets);
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LeibnizAlgebra load_algebra(const std::string& source)
{
    if (source == "lambda6")
        return builtin_lambda6();
    const std::string text = read_file(source);
    try {
        return parse_algebra_json(text);
    } catch (const ParseError& e) {
        throw ParseError(source + ": " + e.what(), e.line(), e.column());
    }
}

std::vector<Cochain> parse_representatives_json(std::string_view text, std::size_t algebra_dim,
                                                std::size_t expected_degree)
{
    const ordered_json doc = parse_document(text);
    if (!doc.is_object())
        fail("$", "expected an object");
    if (!doc.contains("degree") || !doc.at("degree").is_number_integer())
        fail("$.degree", "expected an integer");
    if (doc.at("degree").get<long long>() != static_cast<long long>(expected_degree))
        fail("$.degree", "expected degree " + std::to_string(expected_degree));
    if (!doc.contains("representatives") || !doc.at("representatives").is_array())
        fail("$.representatives", "expected an array");

    std::vector<Cochain> out;
    const auto& reps = doc.at("representatives");
    for (std::size_t r = 0; r < reps.size(); ++r) {
        const std::string path = "$.representatives[" + std::to_string(r) + "]";
        if (!reps[r].is_object() || !reps[r].contains("entries") || !reps[r].at("entries").is_array())
            fail(path, "expected an object with an \"entries\" array");
        Cochain c(algebra_dim, expected_degree);
        const auto& entries = reps[r].at("entries");
        for (std::size_t e = 0; e < entries.size(); ++e) {
            const std::string epath = path + ".entries[" + std::to_string(e) + "]";
            const auto& entry = entries[e];
            if (!entry.is_object())
                fail(epath, "expected an object");
            if (!entry.contains("inputs") || !entry.at("inputs").is_array() ||
                entry.at("inputs").size() != expected_degree)
                fail(epath + ".inputs", "expected " + std::to_string(expected_degree) + " indices");
            std::vector<std::size_t> inputs;
            for (const auto& i : entry.at("inputs")) {
                if (!i.is_number_integer() || i.get<long long>() < 1 ||
                    static_cast<std::size_t>(i.get<long long>()) > algebra_dim)
                    fail(epath + ".inputs", "index outside 1.." + std::to_string(algebra_dim));
                inputs.push_back(static_cast<std::size_t>(i.get<long long>() - 1));
            }
            const std::size_t k = index_field(entry, "output", algebra_dim, epath);
            c.at(c.tuple_index(inputs), k) += coeff_field(entry, epath);
        }
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

    PolyTerms parse()
    {
        PolyTerms out;
        skip_ws();
        if (at_end())
            error("empty polynomial");
        bool first = true;
        while (!at_end()) {
            Scalar sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                error("expected '+' or '-'");
            }
            auto [m, c] = term();
            out[m] += sign * c;
            first = false;
            skip_ws();
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

private:
    std::pair<Monomial, Scalar> term()
    {
        Monomial m(names_.size(), 0);
        Scalar c = 1;
        while (true) {
            skip_ws();
            if (at_end())
                error("expected a number or generator");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c *= number();
            } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
                const std::size_t start = pos_;
                while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                    ++pos_;
                const std::string name(text_.substr(start, pos_ - start));
                std::size_t g = names_.size();
                for (std::size_t i = 0; i < names_.size(); ++i)
                    if (names_[i] == name)
                        g = i;
                if (g == names_.size())
                    error("unknown generator \"" + name + "\"", start);
                unsigned e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    const std::size_t s = pos_;
                    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                        ++pos_;
                    if (s == pos_)
                        error("expected an exponent");
                    e = static_cast<unsigned>(std::stoul(std::string(text_.substr(s, pos_ - s))));
                }
                m[g] += e;
            } else {
                error(std::string("unexpected character '") + peek() + "'");
            }
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            return {m, c};
        }
    }

    Scalar number()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (!at_end() && peek() == '/') {
            ++pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
        }
        try {
            return parse_scalar(text_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            error(e.what(), start);
        }
    }

    [[noreturn]] void error(const std::string& msg) { error(msg, pos_); }
    [[noreturn]] void error(const std::string& msg, std::size_t at)
    {
        throw ParseError("column " + std::to_string(at + 1) + ": " + msg, 1, at + 1);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

} // namespace

PolyTerms parse_polynomial(std::string_view text, const std::vector<std::string>& names)
{
    return PolyParser(text, names).parse();
}

} // namespace leibniz
