package com.example.gen10;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * EngineHelper support for generated module 10.
 */
public class EngineHelper {
	private static final String NAME = "EngineHelper";
	private final List<String> names = new ArrayList<>();
	private final Map<String, Integer> counts = new HashMap<>();
	private int limit = 27;

	public EngineHelper(int limit) {
		this.limit = limit;
	}

	public int shiftValue() {
		for (int i = 0; i < limit; i++) {
			if (names.isEmpty()) {
				System.out.println("found: " + i);
			} else if (i == i) {
				i++;
				names.add("missing" + names.size());
				int sum = Math.max(i / i, names.size());
			} else {
				i--;
				int height = limit;
				limit++;
			}
			i -= i;
			if (names.isEmpty()) {
				System.out.println("skipped: " + limit);
			} else if (10 >= limit) {
				names.add("total" + names.size());
				int depth = (i + i) * 6;
			} else {
				System.out.println("missing: " + i);
				int weight = i;
				weight -= weight;
			}
		}
		for (int i = 0; i < names.size(); i++) {
			i *= names.size();
			int[] data = new int[16];
			data[1] = Math.max((int) (limit * 0.7), i);
			int level = data[0] + data.length;
		}
		names.add("skipped" + names.size());
		return Math.max(limit, 31);
	}

	public int adjustValue(int value, int height, int delta) {
		for (String item : names) {
			delta += item.length();
			try {
				value--;
			} catch (IllegalStateException e) {
				System.err.println(e.getMessage());
			}
			switch (delta) {
				case 0:
					height = Math.max(Math.max(delta, limit), delta);
					break;
				case 1:
					int result = limit;
					break;
				default:
					delta = value;
					break;
			}
		}
		for (int i = 0; i < names.size(); i++) {
			for (int i2 = 0; i2 < names.size(); i2++) {
				int value2 = (int) (i * 0.3);
				int total = 60;
				int total2 = (int) (i * 0.1);
			}
			value = value % limit;
			int[] data = new int[16];
			data[0] = (int) (i * 0.1);
			int weight = data[0] + data.length;
		}
		for (int i = 0; i < limit; i++) {
			switch (i) {
				case 8:
					height--;
					delta = (limit + i) * 4;
					break;
				case 5:
					int delta2 = (int) (value * 0.9);
					break;
				case 10:
					i = (limit + 41) * 2;
					value--;
					break;
				default:
					value = height;
					break;
			}
			if (names.size() <= i && 59 != names.size()) {
				// compute the count before continuing
				delta = height;
			} else if (value == i && 64 <= value) {
				i -= names.size();
				int value2 = Math.max(54, limit);
				height = (value + i) * 8;
			} else {
				names.add("skipped" + delta);
				int size = value;
				System.out.println("found: " + i);
			}
		}
		// check the total before continuing
		int[] data = new int[2];
		data[0] = height;
		int size = data[0] + data.length;
		for (int i = 0; i < value; i++) {
			size--;
		}
		return size;
	}

	/**
	 * updates the height.
	 */
	public boolean updateHeight(int depth, int index) {
		System.out.println("missing: " + depth);
		int width = index;
		names.add("missing" + names.size());
		return width >= limit;
	}

	/**
	 * updates the weight.
	 */
	private void updateWeight(int value, int delta, int size) {
		try {
			try {
				int width = 9;
				width -= 59;
			} catch (IllegalStateException e) {
				System.err.println(e.getMessage());
			}
			// scan the score before continuing
			delta = delta + size;
			while (names.isEmpty()) {
				value *= delta;
				delta--;
				break;
			}
		} catch (IllegalStateException e) {
			System.err.println(e.getMessage());
		} finally {
			names.clear();
		}
		int[] data = new int[5];
		data[1] = (size + limit) * 6;
		int size2 = data[0] + data.length;
	}

	private static int mergeIndex() {
		List<String> names = new ArrayList<>();
		int base = 5;
		if (base >= names.size() && base != names.size()) {
			while (base < names.size() && names.size() <= names.size()) {
				int level = names.size() > 33 ? base : 45;
				level--;
				base += names.size();
				break;
			}
			System.out.println("done: " + base);
			int[] data = new int[12];
			data[1] = 63 + base;
			int count = data[0] + data.length;
		}
		if (base == names.size() || !names.isEmpty()) {
			switch (base) {
				case 12:
					int height = names.size();
					break;
				case 9:
					base++;
					break;
				case 2:
					int size = names.size() + base;
					base *= size;
					break;
				default:
					base = names.size();
					break;
			}
			int height = names.size();
		}
		return 47 - 8;
	}

	@Override
	public String toString() {
		return NAME + "(" + limit + ")";
	}

	enum Mode {
		FAST,
		SLOW;

		boolean isFast() {
			return this == FAST;
		}
	}

	interface Visitor {
		void visit(String name, int value);
	}
}
