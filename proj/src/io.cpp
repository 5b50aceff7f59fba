#include "tdcode/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tdcode/error.hpp"

namespace tdcode {

namespace {

std::int64_t parse_token(std::string_view tok) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw Error(ErrorKind::InvalidInput, "not an integer weight: '" + std::string(tok) + "'");
    }
    if (v < 0) {
        throw Error(ErrorKind::InvalidInput, "negative weight " + std::string(tok));
    }
    return v;
}

}  // namespace

std::vector<std::int64_t> parse_weights(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorKind::InvalidInput, std::string("bad JSON weights: ") + e.what());
        }
        if (!doc.is_array()) {
            throw Error(ErrorKind::InvalidInput, "JSON weights must be an array");
        }
        std::vector<std::int64_t> out;
        for (const auto& item : doc) {
            if (!item.is_number_integer()) {
                throw Error(ErrorKind::InvalidInput, "JSON weights must be integers");
            }
            if (item.is_number_unsigned() && item.get<std::uint64_t>() > INT64_MAX) {
                throw Error(ErrorKind::InvalidInput, "weight exceeds 63 bits");
            }
            const std::int64_t v = item.get<std::int64_t>();
            if (v < 0) {
                throw Error(ErrorKind::InvalidInput, "negative weight " + std::to_string(v));
            }
            out.push_back(v);
        }
        return out;
    }
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t start = text.find_first_not_of(" \t\r\n,", pos);
        if (start == std::string_view::npos) {
            break;
        }
        std::size_t end = text.find_first_of(" \t\r\n,", start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        out.push_back(parse_token(text.substr(start, end - start)));
        pos = end;
    }
    return out;
}

std::vector<std::int64_t> read_weights_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::InvalidInput, "cannot open weights file " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_weights(buf.str());
}

}  // namespace tdcode
