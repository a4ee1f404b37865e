// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

int main() { return 0; }
