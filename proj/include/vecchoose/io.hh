#pragma once

#include <vecchoose/constructions.hh>
#include <vecchoose/engine.hh>
#include <vecchoose/graph.hh>
#include <vecchoose/linalg.hh>

#include <filesystem>
#include <string>
#include <string_view>

namespace vecchoose
{
    // Text formats. Parsers throw ParseError with a "line N:" prefix; blank
    // lines and lines starting with '#' are skipped.

    /// graph <n> <m>, then e <u> <v> per edge, then l <v> <label>.
    auto print_graph(const Graph & g) -> std::string;
    auto parse_graph(std::string_view text) -> Graph;

    /// l <v> <label> lines only.
    auto print_labels(const Graph & g) -> std::string;

    auto print_dot(const Graph & g) -> std::string;

    /// field p|Q, ambient <t>, then v <id> dim <d> and d basis rows per vertex.
    auto print_assignment(const SubspaceAssignment & a) -> std::string;

    /// Pairs the spaces in text with g; every vertex must appear exactly once.
    auto parse_assignment(const Graph & g, std::string_view text) -> SubspaceAssignment;

    /// v <id> followed by one row, per vertex.
    auto print_choice(const Choice & c) -> std::string;
    auto parse_choice(const Field & field, std::size_t ambient, std::size_t vertices, std::string_view text) -> Choice;

    /// f <v> <d> per vertex.
    auto print_dimensions(const DimensionMap & f) -> std::string;
    auto parse_dimensions(std::size_t vertices, std::string_view text) -> DimensionMap;

    /// partition <k>, then p <v> <edge>:<part> ... per vertex.
    auto print_partition(const EdgePartition & p) -> std::string;
    auto parse_partition(const Graph & g, std::string_view text) -> EdgePartition;

    /// Certificate with its field and ambient so the witness can be read back.
    /// Wall-clock time is left out so that reruns print identical bytes.
    struct CertificateFile
    {
        SearchCertificate certificate;
        Field field;
        std::size_t ambient = 0;
    };

    auto print_certificate(const SearchCertificate & c, const Field & field, std::size_t ambient) -> std::string;
    auto parse_certificate(std::string_view text) -> CertificateFile;

    auto parse_verdict(std::string_view name) -> Verdict;

    auto read_file(const std::filesystem::path & path) -> std::string;

    /// Writes to a sibling temporary file and renames it over path.
    auto write_file_atomic(const std::filesystem::path & path, std::string_view content) -> void;
}
