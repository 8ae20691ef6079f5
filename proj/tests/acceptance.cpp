// Placeholder; the acceptance suite is built out below.
int main() { return 0; }
