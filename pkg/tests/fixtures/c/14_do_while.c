int main(void)
{
    int fuel = 100;
    int burns = 0;
    do {
        fuel -= 9;
        burns++;
    } while (fuel > 10);
    return burns;
}
