#ifndef SENTIPROFILE_DATA_PATHS_HPP_
#define SENTIPROFILE_DATA_PATHS_HPP_

#include <filesystem>  // std::filesystem::path

namespace sentiprofile {

/// $SENTIPROFILE_DATA_DIR if set, otherwise the data directory the library was built against.
[[nodiscard]] std::filesystem::path data_dir();

/// $SENTIPROFILE_KB if set, otherwise knowledge_base.txt in data_dir().
[[nodiscard]] std::filesystem::path default_knowledge_base_path();

[[nodiscard]] std::filesystem::path default_dictionary_path();
[[nodiscard]] std::filesystem::path default_emoticons_path();
[[nodiscard]] std::filesystem::path default_questions_path();

}  // namespace sentiprofile

#endif  // SENTIPROFILE_DATA_PATHS_HPP_
