#pragma once

#include "afbd/framework.hpp"

#include <string>
#include <string_view>

namespace afbd {

enum class FileFormat { Apx, Tgf };

/// ICCMA-style `arg(a).` / `att(a,b).` statements, one per line. Blank
/// lines and lines starting with `%` are skipped. Repeated attack statements
/// collapse into one attack.
Framework parse_apx(std::string_view text);

/// Trivial Graph Format: node ids (one per line, anything after the first
/// token is a label and ignored), a `#` line, then `src dst` edge lines.
Framework parse_tgf(std::string_view text);

Framework parse_framework(std::string_view text, FileFormat format);

/// Arguments first, then attacks, each in framework order, LF-terminated.
std::string serialize_apx(const Framework& f);
std::string serialize_tgf(const Framework& f);

/// `.tgf` (case-insensitive) selects TGF; anything else is APX.
FileFormat format_from_path(std::string_view path);

} // namespace afbd
