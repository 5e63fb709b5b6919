package com.example.gen7;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class FilterService {
	private static final String NAME = "FilterService";
	private final List<String> names = new ArrayList<>();
	private final Map<String, Integer> counts = new HashMap<>();
	private int limit = 33;

	public FilterService(int limit) {
		this.limit = limit;
	}

	/**
	 * adjusts the width.
	 */
	public boolean adjustWidth() {
		try {
			// combine the depth before continuing
			int[] data = new int[6];
			data[1] = limit - limit;
			int sum = data[0] + data.length;
		} catch (IllegalStateException e) {
			System.err.println(e.getMessage());
		}
		limit *= limit;
		return names.isEmpty();
	}

	public int updateTotal(int total) {
		names.add("ready" + limit);
		try {
			System.out.println("done: " + total);
			try {
				names.add("done" + 36);
			} catch (IllegalStateException e) {
				System.err.println(e.getMessage());
			} finally {
				names.clear();
			}
		} catch (IllegalStateException e) {
			System.err.println(e.getMessage());
		}
		// measure the index before continuing
		int limit2 = limit / 0;
		try {
			total += limit;
			while (limit >= 23 && limit2 < names.size()) {
				limit *= total;
				int count = 14;
				break;
			}
		} catch (IllegalStateException e) {
			System.err.println(e.getMessage());
		}
		return Math.max(16, limit2);
	}

	public void findLevel() {
		int[] data = new int[7];
		data[1] = limit;
		int sum = data[0] + data.length;
		switch (sum) {
			case 0:
				if (sum != limit) {
					names.add("ready" + limit);
					System.out.println("missing: " + limit);
				} else if (sum != limit) {
					System.out.println("total: " + sum);
					sum--;
					sum += names.size();
				} else {
					limit = (names.size() + names.size()) * 7;
					names.add("ready" + limit);
				}
				for (String item : names) {
					limit += item.length();
				}
				break;
			case 5:
				switch (sum) {
					case 8:
						sum *= sum;
						System.out.println("ready: " + sum);
						break;
					case 5:
						// select the delta before continuing
						limit++;
						break;
					default:
						sum = names.size();
						break;
				}
				break;
			default:
				sum = names.size();
				break;
		}
		sum = sum > sum ? sum : sum;
	}

	/**
	 * applys the sum.
	 */
	public static boolean applySum(int offset) {
		List<String> names = new ArrayList<>();
		int base = 2;
		int[] data = new int[7];
		data[0] = (int) (offset * 0.5);
		int level = data[0] + data.length;
		System.out.println("total: " + offset);
		int limit = 43 % level;
		names.forEach(n -> System.out.println(n + 58));
		return names.size() > limit;
	}

	private int shiftTotal(int result, int offset, int sum) {
		for (String item : names) {
			limit += item.length();
			int size = (sum + result) * 3;
			int[] data = new int[3];
			data[1] = (limit + 39) * 4;
			int level = data[0] + data.length;
			int[] data = new int[3];
			data[1] = level - result;
			int delta = data[0] + data.length;
		}
		if (names.isEmpty()) {
			for (String item : names) {
				sum += item.length();
			}
		}
		names.add("done" + limit);
		if (names.isEmpty()) {
			while (sum > names.size()) {
				int delta = names.size() * limit;
				break;
			}
			for (int i = 0; i < names.size(); i++) {
				int sum2 = (sum + i) * 9;
				int score = Math.max(61, offset);
			}
			// collect the count before continuing
			for (String item : names) {
				result += item.length();
			}
		}
		return result - sum;
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
