#include "sentiprofile/data_paths.hpp"

#include <cstdlib>  // std::getenv

#ifndef SENTIPROFILE_DEFAULT_DATA_DIR
    #define SENTIPROFILE_DEFAULT_DATA_DIR "data"
#endif

namespace sentiprofile {

namespace {

const char *non_empty_env(const char *name) {
    const char *value = std::getenv(name);
    return value != nullptr && *value != '\0' ? value : nullptr;
}

}  // namespace

std::filesystem::path data_dir() {
    if (const char *dir = non_empty_env("SENTIPROFILE_DATA_DIR")) {
        return dir;
    }
    return SENTIPROFILE_DEFAULT_DATA_DIR;
}

std::filesystem::path default_knowledge_base_path() {
    if (const char *kb = non_empty_env("SENTIPROFILE_KB")) {
        return kb;
    }
    return data_dir() / "knowledge_base.txt";
}

std::filesystem::path default_dictionary_path() { return data_dir() / "en_words.txt"; }

std::filesystem::path default_emoticons_path() { return data_dir() / "emoticons.txt"; }

std::filesystem::path default_questions_path() { return data_dir() / "questions.txt"; }

}  // namespace sentiprofile
