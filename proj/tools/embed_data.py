#!/usr/bin/env python3
# Copyright 2026 The namecheck Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates include/namecheck/default_data.hpp from data/*.tsv."""

import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
HEADER = ROOT / "include" / "namecheck" / "default_data.hpp"

LICENSE = "\n".join(
    line.replace("#", "//", 1)
    for line in pathlib.Path(__file__).read_text().splitlines()[1:14]
)


def literal(name: str, path: pathlib.Path) -> str:
    text = path.read_text()
    assert ")nc\"" not in text
    return f'inline constexpr std::string_view {name} = R"nc({text})nc";\n'


def main() -> None:
    body = [
        LICENSE,
        "",
        "// Generated by tools/embed_data.py from data/. Do not edit.",
        "",
        "#ifndef NAMECHECK_DEFAULT_DATA_HPP",
        "#define NAMECHECK_DEFAULT_DATA_HPP",
        "",
        "#include <string_view>",
        "",
        "namespace namecheck {",
        "",
        literal("kDefaultLexicon", ROOT / "data" / "lexicon.tsv"),
        literal("kDefaultNameRegexes", ROOT / "data" / "name_regexes.tsv"),
        "}  // namespace namecheck",
        "",
        "#endif  // NAMECHECK_DEFAULT_DATA_HPP",
        "",
    ]
    HEADER.write_text("\n".join(body))


if __name__ == "__main__":
    main()
