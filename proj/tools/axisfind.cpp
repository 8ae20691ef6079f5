// Placeholder; the axis-presentation search is built out below.
int main() { return 0; }
