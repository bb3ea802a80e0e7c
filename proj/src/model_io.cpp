#include "sea/model_io.hpp"

#include <fstream>
#include <sstream>

namespace sea {

namespace {

std::string_view trim(std::string_view s, std::size_t* col_offset = nullptr) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        if (col_offset) *col_offset += s.size();
        return {};
    }
    std::size_t e = s.find_last_not_of(" \t\r");
    if (col_offset) *col_offset += b;
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

bool is_section_key(std::string_view key) {
    return key == "name" || key == "elements" || key == "zero" || key == "one" ||
           key == "oplus" || key == "circ";
}

} // namespace

FiniteModelData parse_model_text(std::string_view text) {
    FiniteModelData data;
    bool saw_elements = false, saw_zero = false, saw_one = false, saw_oplus = false;
    enum class Section { None, Oplus, Circ } section = Section::None;

    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        std::size_t col = 1;
        std::string_view line = trim(lines[i], &col);
        if (line.empty() || line.front() == '#') continue;

        std::size_t colon = line.find(':');
        std::string_view key = colon == std::string_view::npos ? std::string_view{}
                                                               : trim(line.substr(0, colon));
        if (!key.empty() && is_section_key(key)) {
            std::string_view value = trim(line.substr(colon + 1));
            if (key == "name") {
                data.name = std::string(value);
                section = Section::None;
            } else if (key == "elements") {
                if (saw_elements) throw ParseError("duplicate 'elements' field", lineno, col);
                saw_elements = true;
                std::string_view rest = value;
                while (true) {
                    std::size_t comma = rest.find(',');
                    std::string_view label = trim(rest.substr(0, comma));
                    if (label.empty())
                        throw ParseError("empty element label", lineno, col);
                    data.labels.emplace_back(label);
                    if (comma == std::string_view::npos) break;
                    rest = rest.substr(comma + 1);
                }
                section = Section::None;
            } else if (key == "zero") {
                if (value.empty()) throw ParseError("empty 'zero' label", lineno, col);
                data.zero_label = std::string(value);
                saw_zero = true;
                section = Section::None;
            } else if (key == "one") {
                if (value.empty()) throw ParseError("empty 'one' label", lineno, col);
                data.one_label = std::string(value);
                saw_one = true;
                section = Section::None;
            } else if (key == "oplus") {
                if (!value.empty())
                    throw ParseError("'oplus' takes its triples on following lines", lineno, col);
                saw_oplus = true;
                section = Section::Oplus;
            } else { // circ
                if (!value.empty())
                    throw ParseError("'circ' takes its triples on following lines", lineno, col);
                data.has_product = true;
                section = Section::Circ;
            }
            continue;
        }

        // body line: one comma-separated triple
        if (section == Section::None)
            throw ParseError("unexpected line outside any section", lineno, col);
        std::vector<std::string> fields;
        std::string_view rest = line;
        while (true) {
            std::size_t comma = rest.find(',');
            std::string_view field = trim(rest.substr(0, comma));
            fields.emplace_back(field);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (fields.size() != 3)
            throw ParseError("expected 'left, right, result' (3 fields, got " +
                                 std::to_string(fields.size()) + ")",
                             lineno, col);
        for (const auto& f : fields)
            if (f.empty()) throw ParseError("empty label in triple", lineno, col);
        FiniteTriple triple{fields[0], fields[1], fields[2], lineno};
        if (section == Section::Oplus)
            data.sum_triples.push_back(std::move(triple));
        else
            data.product_triples.push_back(std::move(triple));
    }

    const std::size_t end = lines.size();
    if (!saw_elements) throw ParseError("missing 'elements' field", end, 1);
    if (!saw_zero) throw ParseError("missing 'zero' field", end, 1);
    if (!saw_one) throw ParseError("missing 'one' field", end, 1);
    if (!saw_oplus) throw ParseError("missing 'oplus' section", end, 1);
    return data;
}

std::string serialize_model_text(const FiniteModelData& data) {
    std::ostringstream out;
    if (!data.name.empty()) out << "name: " << data.name << "\n";
    out << "elements: ";
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
        if (i) out << ", ";
        out << data.labels[i];
    }
    out << "\n";
    out << "zero: " << data.zero_label << "\n";
    out << "one: " << data.one_label << "\n";
    out << "oplus:\n";
    for (const auto& t : data.sum_triples)
        out << "  " << t.left << ", " << t.right << ", " << t.result << "\n";
    if (data.has_product) {
        out << "circ:\n";
        for (const auto& t : data.product_triples)
            out << "  " << t.left << ", " << t.right << ", " << t.result << "\n";
    }
    return out.str();
}

FiniteModelData read_model_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw ModelError("cannot open model file: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model_text(buf.str());
}

} // namespace sea
