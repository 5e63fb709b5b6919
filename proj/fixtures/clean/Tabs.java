package fixtures.lexical;

public class Tabs {
	int x = 1;	// counter
	int limit =		8;

	void f() {
		if (x > 0) {
			x--;
		}
	}
}
