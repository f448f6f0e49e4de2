# Identities package
