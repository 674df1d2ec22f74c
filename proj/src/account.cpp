// ethacct: Ethereum accounts and transactions for constrained signers
// Copyright 2026 The ethacct Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ethacct/account.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace ethacct
{
Address Address::from_hex(std::string_view text)
{
    return from_bytes(ethacct::from_hex(text));
}

Address Address::from_bytes(BytesView b)
{
    if (b.size() != 20)
        throw std::invalid_argument{"address must be 20 bytes"};
    Address a;
    std::copy(b.begin(), b.end(), a.bytes.begin());
    return a;
}

Address derive_address(const ecdsa::PublicKey& pub)
{
    const auto serialized = pub.serialize();
    const auto h = keccak256(serialized);
    return Address::from_bytes(BytesView{h}.last<20>());
}

AccountState rehydrate(const ecdsa::PrivateKey& secret, uint64_t next_nonce)
{
    const auto pub = ecdsa::derive_public(secret);
    return {secret, pub, derive_address(pub), next_nonce};
}

AccountFile parse_account_file(std::string_view text)
{
    std::istringstream in{std::string{text}};
    std::string key_line;
    if (!std::getline(in, key_line))
        throw ecdsa::KeyError{"account file is empty"};
    AccountFile file{ecdsa::PrivateKey::from_hex(key_line), std::nullopt};

    std::string nonce_line;
    if (std::getline(in, nonce_line))
    {
        const auto b = nonce_line.find_first_not_of(" \t\r");
        if (b != std::string::npos)
        {
            const auto e = nonce_line.find_last_not_of(" \t\r") + 1;
            uint64_t nonce = 0;
            const auto [ptr, ec] = std::from_chars(nonce_line.data() + b, nonce_line.data() + e, nonce);
            if (ec != std::errc{} || ptr != nonce_line.data() + e)
                throw std::invalid_argument{"account file: nonce must be a decimal integer"};
            file.nonce = nonce;
        }
    }
    return file;
}

std::string format_account_file(const AccountFile& file)
{
    std::string out = file.secret.to_hex() + "\n";
    if (file.nonce)
        out += std::to_string(*file.nonce) + "\n";
    return out;
}

AccountFile load_account_file(const std::filesystem::path& path)
{
    std::ifstream in{path};
    if (!in)
        throw std::runtime_error{"cannot open account file " + path.string()};
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_account_file(ss.str());
}

void save_account_file(const std::filesystem::path& path, const AccountFile& file)
{
    std::ofstream out{path, std::ios::trunc};
    if (!out)
        throw std::runtime_error{"cannot write account file " + path.string()};
    out << format_account_file(file);
}
}  // namespace ethacct
