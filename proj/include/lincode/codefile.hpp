#ifndef LINCODE_CODEFILE_HPP
#define LINCODE_CODEFILE_HPP

#include <string>

#include "lincode/code.hpp"
#include "lincode/extend.hpp"

namespace lincode {

// Code file: whitespace-separated integers, '#' starts a comment that runs to
// the end of the line. Header q n k, then the k*n generator entries row by
// row.
GeneratorMatrix parse_code_file(const std::string& text);
GeneratorMatrix load_code_file(const std::string& path);
std::string format_code_file(const GeneratorMatrix& g);

// Extension file: header q m k, then a k x m block whose columns are the
// columns to append.
struct ExtensionFile {
    int q = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    ColumnBlock columns;
};

ExtensionFile parse_extension_file(const std::string& text);
ExtensionFile load_extension_file(const std::string& path);
std::string format_extension_file(int q, const ColumnBlock& columns);

}  // namespace lincode

#endif
