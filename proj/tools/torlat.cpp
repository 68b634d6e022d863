// placeholder; full CLI added with the remaining modules
int main() { return 0; }
