// Placeholder; the tabulator is built out below.
int main() { return 0; }
